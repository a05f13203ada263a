"""Desk-scale EM video-leak interception pipeline.

Synthesizes compromising-emanation captures from reference frames, folds
them back into images, aligns and splits them into patches, retrieves
character content with a template recognizer, scores retrieval quality,
and raises an alarm when watched keywords show up in the recovered text.
"""

__version__ = "0.1.0"
