"""Embedded bitmap font data. Generated by tools/make_fontdata.py; do not edit."""

CANONICAL_EM = 24

# face -> (ascent, descent, {char: (width, y_offset_from_ascender, row_bits)})
FACES = {
    'mono': (23, 6, {
        'A': (14, 5, (480, 1008, 1008, 1008, 1008, 1848, 1848, 1848, 1848, 3900, 3612, 4092, 8190, 8190, 7182, 7182, 15375, 15375)),
        'B': (12, 5, (4080, 4092, 4094, 3614, 3598, 3598, 3614, 4092, 4080, 4094, 3598, 3591, 3591, 3591, 3599, 4095, 4094, 4088)),
        'C': (11, 5, (126, 255, 511, 963, 897, 1920, 1792, 1792, 1792, 1792, 1792, 1792, 1920, 897, 963, 511, 255, 126)),
        'D': (12, 5, (4064, 4088, 4092, 3614, 3598, 3599, 3591, 3591, 3591, 3591, 3591, 3591, 3599, 3598, 3614, 4092, 4088, 4064)),
        'E': (11, 5, (2047, 2047, 2047, 1792, 1792, 1792, 1792, 2046, 2046, 2046, 1792, 1792, 1792, 1792, 1792, 2047, 2047, 2047)),
        'F': (11, 5, (2047, 2047, 2047, 1792, 1792, 1792, 1792, 2046, 2046, 2046, 1792, 1792, 1792, 1792, 1792, 1792, 1792, 1792)),
        'G': (12, 5, (252, 510, 1022, 1926, 1792, 3840, 3584, 3584, 3615, 3615, 3615, 3591, 3847, 1799, 1927, 1023, 511, 252)),
        'H': (11, 5, (1799, 1799, 1799, 1799, 1799, 1799, 1799, 2047, 2047, 2047, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799)),
        'I': (9, 5, (511, 511, 511, 56, 56, 56, 56, 56, 56, 56, 56, 56, 56, 56, 56, 511, 511, 511)),
        'J': (11, 5, (127, 127, 127, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 1031, 1551, 2046, 2046, 1016)),
        'K': (12, 5, (3599, 3614, 3644, 3644, 3704, 3824, 4064, 4064, 4080, 4080, 3960, 3704, 3644, 3644, 3614, 3614, 3599, 3599)),
        'L': (11, 5, (1792, 1792, 1792, 1792, 1792, 1792, 1792, 1792, 1792, 1792, 1792, 1792, 1792, 1792, 1792, 2047, 2047, 2047)),
        'M': (12, 5, (3855, 3855, 3999, 3999, 3999, 3999, 3831, 3831, 3831, 3831, 3831, 3687, 3591, 3591, 3591, 3591, 3591, 3591)),
        'N': (11, 5, (1927, 1927, 1927, 1991, 1991, 1991, 1895, 1895, 1895, 1847, 1847, 1847, 1823, 1823, 1823, 1807, 1807, 1807)),
        'O': (12, 5, (240, 1020, 2046, 1950, 1806, 3591, 3591, 3591, 3591, 3591, 3591, 3591, 3591, 1806, 1806, 2046, 1020, 248)),
        'P': (11, 5, (2040, 2046, 2046, 1807, 1799, 1799, 1799, 1807, 2046, 2046, 2040, 1792, 1792, 1792, 1792, 1792, 1792, 1792)),
        'Q': (12, 5, (240, 1020, 2046, 1950, 1806, 3591, 3591, 3591, 3591, 3591, 3591, 3591, 3591, 1807, 1806, 2046, 1020, 252, 30, 14, 4)),
        'R': (13, 5, (8160, 8184, 8184, 7228, 7196, 7196, 7196, 7228, 8184, 8176, 8176, 7288, 7288, 7228, 7228, 7198, 7198, 7183)),
        'S': (11, 5, (252, 1022, 1022, 1926, 1794, 1792, 1920, 2032, 1020, 254, 63, 15, 7, 1031, 1807, 2046, 2046, 1016)),
        'T': (11, 5, (2047, 2047, 2047, 112, 112, 112, 112, 112, 112, 112, 112, 112, 112, 112, 112, 112, 112, 112)),
        'U': (11, 5, (1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1935, 1022, 1022, 248)),
        'V': (13, 5, (7695, 7695, 3598, 3598, 3598, 3870, 3870, 1820, 1820, 1820, 1980, 952, 952, 952, 952, 496, 496, 496)),
        'W': (14, 5, (14343, 14343, 14343, 14343, 6151, 7654, 7662, 7662, 7662, 7662, 7678, 7998, 7998, 3902, 3900, 3900, 3612, 3612)),
        'X': (14, 5, (15375, 7182, 7710, 3900, 1848, 2040, 1008, 1008, 480, 480, 1008, 1008, 2040, 1848, 3900, 7710, 7182, 15375)),
        'Y': (13, 5, (7695, 3598, 3870, 1820, 1980, 952, 952, 1016, 496, 496, 224, 224, 224, 224, 224, 224, 224, 224)),
        'Z': (12, 5, (4095, 4095, 4095, 15, 30, 60, 60, 120, 240, 240, 480, 960, 960, 1920, 3840, 4095, 4095, 4095)),
        'a': (12, 10, (1016, 2046, 2046, 1039, 7, 1023, 2047, 4095, 3591, 3599, 4095, 2039, 999)),
        'b': (12, 5, (3584, 3584, 3584, 3584, 3584, 3704, 3836, 4094, 3855, 3591, 3591, 3591, 3591, 3591, 3855, 4094, 3836, 3704)),
        'c': (11, 10, (126, 511, 1023, 961, 1920, 1792, 1792, 1792, 1920, 961, 1023, 511, 126)),
        'd': (12, 5, (7, 7, 7, 7, 7, 487, 1015, 2047, 3855, 3591, 3591, 3591, 3591, 3591, 3855, 2047, 1015, 487)),
        'e': (12, 10, (504, 1020, 2046, 1807, 3591, 4095, 4095, 4095, 3584, 3842, 2046, 1022, 508)),
        'f': (10, 5, (63, 127, 127, 112, 112, 1023, 1023, 1023, 112, 112, 112, 112, 112, 112, 112, 112, 112, 112)),
        'g': (12, 10, (487, 1023, 2047, 3855, 3591, 3591, 3591, 3591, 3591, 3855, 2047, 1023, 503, 7, 1039, 2046, 2046, 1016)),
        'h': (11, 5, (1792, 1792, 1792, 1792, 1792, 1852, 2046, 2047, 1935, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799)),
        'i': (11, 3, (112, 112, 240, 240, 192, 192, 192, 1008, 1008, 1008, 112, 112, 112, 112, 112, 112, 112, 2047, 2047, 2047)),
        'j': (8, 3, (7, 7, 15, 15, 12, 12, 12, 63, 63, 63, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 15, 255, 254, 252)),
        'k': (12, 5, (3584, 3584, 3584, 3584, 3584, 3614, 3644, 3704, 3824, 4064, 4064, 4080, 3952, 3704, 3644, 3612, 3614, 3599)),
        'l': (11, 5, (2016, 2016, 2016, 224, 224, 224, 224, 224, 224, 224, 224, 224, 224, 224, 240, 255, 127, 63)),
        'm': (13, 10, (7646, 8158, 8191, 7399, 7399, 7399, 7399, 7399, 7399, 7399, 7399, 7399, 7399)),
        'n': (11, 10, (1852, 2046, 2047, 1935, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799)),
        'o': (12, 10, (504, 1020, 2046, 1806, 3591, 3591, 3591, 3591, 3591, 3854, 2046, 1020, 504)),
        'p': (12, 10, (3704, 3836, 4094, 3855, 3591, 3591, 3591, 3591, 3591, 3855, 4094, 3836, 3704, 3584, 3584, 3584, 3584, 3584)),
        'q': (12, 10, (487, 1015, 2047, 3855, 3591, 3591, 3591, 3591, 3591, 3855, 2047, 1015, 487, 7, 7, 7, 7, 7)),
        'r': (10, 10, (926, 959, 1023, 993, 896, 896, 896, 896, 896, 896, 896, 896, 896)),
        's': (11, 10, (508, 1022, 2046, 1794, 1984, 2044, 1022, 127, 7, 1543, 2047, 2046, 508)),
        't': (10, 6, (112, 112, 112, 112, 1023, 1023, 1023, 112, 112, 112, 112, 112, 112, 112, 127, 63, 31)),
        'u': (11, 10, (1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1799, 1935, 2047, 1023, 487)),
        'v': (12, 10, (3855, 3855, 1806, 1806, 1950, 924, 924, 924, 504, 504, 504, 240, 240)),
        'w': (14, 10, (15375, 15375, 15855, 16383, 16383, 16383, 16383, 16383, 16383, 8191, 8190, 8190, 8190)),
        'x': (12, 10, (3855, 1950, 924, 1020, 504, 240, 240, 504, 504, 1020, 924, 1950, 3855)),
        'y': (12, 10, (3855, 1806, 1806, 1950, 924, 924, 988, 504, 504, 248, 240, 240, 240, 224, 480, 2016, 1984, 1920)),
        'z': (11, 10, (2047, 2047, 2047, 30, 60, 120, 248, 240, 480, 960, 2047, 2047, 2047)),
        '0': (12, 5, (504, 1020, 2046, 1950, 3854, 3591, 3647, 3711, 3703, 3703, 3591, 3591, 3591, 3855, 1806, 2046, 1020, 496)),
        '1': (11, 5, (496, 2032, 2032, 1648, 112, 112, 112, 112, 112, 112, 112, 112, 112, 112, 112, 2047, 2047, 2047)),
        '2': (12, 5, (1016, 4092, 4094, 3087, 7, 7, 7, 14, 28, 60, 120, 240, 480, 960, 1920, 4095, 4095, 4095)),
        '3': (12, 5, (1016, 2046, 2047, 1551, 7, 7, 15, 510, 504, 510, 15, 7, 7, 7, 3087, 4094, 4092, 2040)),
        '4': (12, 5, (60, 60, 124, 252, 220, 476, 924, 924, 1820, 1564, 3612, 4095, 4095, 4095, 28, 28, 28, 28)),
        '5': (12, 5, (2046, 2046, 2046, 1792, 1792, 1792, 2040, 2044, 2046, 1055, 7, 7, 7, 7, 2078, 4094, 4092, 2032)),
        '6': (12, 5, (252, 510, 1022, 1922, 1792, 3584, 3832, 4094, 4094, 3855, 3591, 3591, 3591, 3591, 1807, 2046, 1020, 504)),
        '7': (12, 5, (4095, 4095, 4095, 15, 14, 30, 28, 28, 56, 56, 120, 112, 240, 224, 224, 448, 448, 896)),
        '8': (12, 5, (504, 2046, 2046, 3855, 3591, 3591, 3855, 2046, 504, 2046, 3855, 3591, 3591, 3591, 3855, 2046, 2046, 504)),
        '9': (12, 5, (496, 1020, 2046, 3854, 3591, 3591, 3591, 3591, 3855, 2047, 2047, 503, 7, 14, 1054, 2044, 2040, 1008)),
    }),
    'serif': (23, 6, {
        'A': (19, 5, (8064, 8128, 16320, 16320, 16352, 32736, 32752, 30704, 63472, 62456, 123896, 131068, 131068, 262140, 246014, 491774, 516607, 516607)),
        'B': (18, 5, (262128, 61564, 61502, 61470, 61470, 61470, 61502, 61564, 65520, 61564, 61470, 61455, 61455, 61455, 61455, 61470, 61500, 262128)),
        'C': (17, 5, (16383, 32767, 65055, 130055, 129031, 129027, 126976, 126976, 126976, 126976, 126976, 126976, 129031, 129039, 130063, 65087, 65535, 16382)),
        'D': (18, 5, (262080, 61560, 61500, 61470, 61470, 61455, 61455, 61455, 61455, 61455, 61455, 61455, 61454, 61470, 61470, 61500, 61552, 262080)),
        'E': (16, 5, (65535, 65535, 32259, 32259, 32256, 32284, 32284, 32764, 32764, 32764, 32284, 32284, 32256, 32256, 32259, 32259, 65535, 65535)),
        'F': (15, 5, (32767, 32767, 16131, 16131, 16128, 16156, 16156, 16380, 16380, 16380, 16156, 16156, 16128, 16128, 16128, 16128, 32704, 32704)),
        'G': (18, 5, (32766, 131071, 130111, 260111, 258063, 258055, 253952, 253952, 254079, 254079, 254079, 253983, 258079, 258079, 260127, 130175, 65535, 32767)),
        'H': (20, 5, (1047039, 1047039, 516222, 516222, 516222, 516222, 516222, 524286, 524286, 524286, 516222, 516222, 516222, 516222, 516222, 516222, 1047039, 1047039)),
        'I': (8, 5, (255, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 255)),
        'J': (12, 5, (511, 511, 126, 126, 126, 126, 126, 126, 126, 126, 126, 126, 126, 126, 126, 126, 126, 126, 126, 3198, 3838, 4092, 4092)),
        'K': (20, 5, (1048574, 1048574, 516592, 518112, 520128, 524160, 524032, 524032, 524160, 524160, 524224, 524256, 524272, 520184, 518140, 517118, 1047039, 1047039)),
        'L': (15, 5, (32640, 7680, 7680, 7680, 7680, 7680, 7680, 7680, 7680, 7680, 7680, 7680, 7680, 7680, 7681, 7681, 7681, 32767)),
        'M': (24, 5, (16711935, 16744959, 8356350, 8373246, 8373246, 8382462, 8382462, 8388606, 7864190, 7864190, 7601790, 7601790, 7470206, 7470206, 7403646, 7403646, 16515583, 16515583)),
        'N': (19, 5, (520255, 522303, 260110, 261134, 261646, 261902, 262030, 262094, 245742, 245758, 237566, 233470, 231422, 230398, 229886, 229630, 516222, 516158)),
        'O': (19, 5, (8128, 28784, 122940, 114716, 245790, 229390, 491535, 491535, 491535, 491535, 491535, 491535, 229390, 245790, 114716, 122940, 28784, 8128)),
        'P': (16, 5, (65520, 15420, 15390, 15375, 15375, 15375, 15375, 15390, 15420, 16368, 15360, 15360, 15360, 15360, 15360, 15360, 15360, 65280)),
        'Q': (19, 5, (8128, 28784, 122940, 114716, 245790, 229390, 491535, 491535, 491535, 491535, 491535, 491535, 229390, 245790, 114718, 122940, 28792, 8160, 448, 508, 252, 60)),
        'R': (19, 5, (524224, 123376, 123120, 123000, 123000, 123000, 123000, 123120, 123376, 130944, 123872, 123360, 123376, 123120, 123128, 123000, 123004, 522303)),
        'S': (14, 5, (8191, 16383, 16159, 15887, 15879, 16128, 16368, 16380, 16383, 16383, 8191, 1023, 12415, 12319, 14367, 15423, 16383, 16382)),
        'T': (16, 5, (65535, 33729, 33729, 33729, 960, 960, 960, 960, 960, 960, 960, 960, 960, 960, 960, 960, 960, 4080)),
        'U': (19, 5, (523327, 523327, 258062, 258062, 258062, 258062, 258062, 258062, 258062, 258062, 258062, 258062, 260126, 260126, 261182, 131068, 131068, 65528)),
        'V': (19, 5, (523327, 523327, 260126, 260126, 261150, 130108, 130108, 65080, 65144, 65400, 32752, 32752, 16352, 16352, 16352, 8128, 8128, 4032)),
        'W': (27, 5, (133987903, 134020671, 66125598, 66649886, 66649886, 66715420, 33423292, 33423292, 33546168, 16769016, 16752632, 16752624, 8359920, 8327152, 8327152, 8325088, 4130784, 4065248)),
        'X': (18, 5, (261887, 261887, 130684, 130680, 65520, 32752, 32736, 16352, 8160, 8160, 8176, 16376, 16376, 31740, 63996, 61950, 261119, 261119)),
        'Y': (17, 5, (130943, 130943, 65310, 65310, 32700, 16316, 16376, 8184, 8176, 4080, 4064, 2016, 2016, 2016, 2016, 2016, 8184, 8184)),
        'Z': (16, 5, (65535, 32799, 32830, 32830, 124, 248, 496, 496, 992, 1984, 3968, 3968, 7936, 15872, 31744, 31745, 63489, 65535)),
        'a': (14, 11, (4064, 6264, 4156, 60, 4092, 7740, 15420, 15420, 15420, 15420, 7804, 4031)),
        'b': (15, 5, (32512, 32512, 16128, 16128, 16128, 16380, 16382, 16383, 16319, 16159, 16159, 16159, 16159, 16159, 16159, 16319, 32767, 32766)),
        'c': (13, 11, (4095, 8191, 8143, 8071, 7939, 7936, 7936, 7943, 8071, 8143, 8191, 4095)),
        'd': (15, 5, (510, 510, 126, 126, 126, 8190, 16382, 32766, 32510, 31870, 31870, 31870, 31870, 31870, 31870, 32510, 32767, 16383)),
        'e': (13, 11, (4094, 8191, 8127, 7967, 7967, 8191, 8191, 8191, 7951, 8095, 8191, 4095)),
        'f': (11, 5, (127, 243, 481, 480, 480, 480, 2044, 480, 480, 480, 480, 480, 480, 480, 480, 480, 480, 2040)),
        'g': (15, 11, (16383, 32767, 32510, 31870, 31870, 31870, 31870, 31870, 31870, 32510, 32766, 16382, 8190, 28798, 30974, 32764, 32760)),
        'h': (16, 5, (65024, 65024, 32256, 32256, 32256, 32760, 32764, 32766, 32766, 32382, 32382, 32382, 32382, 32382, 32382, 32382, 65535, 65535)),
        'i': (8, 6, (24, 60, 60, 56, 48, 252, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 255)),
        'j': (9, 6, (31, 31, 31, 31, 127, 127, 127, 31, 31, 31, 31, 31, 31, 31, 31, 31, 31, 31, 415, 447, 511, 511)),
        'k': (16, 5, (65024, 65024, 32256, 32256, 32256, 32383, 32383, 32383, 32760, 32752, 32752, 32760, 32760, 32764, 32766, 32766, 65535, 65535)),
        'l': (8, 5, (252, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 255)),
        'm': (24, 11, (16644592, 4095608, 3947580, 3947580, 3947580, 3947580, 3947580, 3947580, 3947580, 3947580, 3947580, 16744191)),
        'n': (16, 11, (65008, 15992, 15420, 15420, 15420, 15420, 15420, 15420, 15420, 15420, 15420, 65407)),
        'o': (13, 11, (504, 1820, 3598, 7695, 7695, 7695, 7695, 7695, 7695, 3598, 1820, 1008)),
        'p': (15, 11, (32504, 7964, 7694, 7695, 7695, 7695, 7695, 7695, 7695, 7694, 7964, 7928, 7680, 7680, 7680, 7680, 32640)),
        'q': (15, 11, (4031, 7292, 14396, 30780, 30780, 30780, 30780, 30780, 30780, 14396, 7292, 4028, 60, 60, 60, 60, 255)),
        'r': (12, 11, (4063, 995, 993, 960, 960, 960, 960, 960, 960, 960, 960, 4080)),
        's': (12, 11, (4095, 4095, 4047, 4071, 4095, 4095, 4095, 4095, 3711, 3903, 4095, 4095)),
        't': (11, 7, (1008, 1008, 1008, 2047, 2047, 2047, 1008, 1008, 1008, 1008, 1008, 1008, 1015, 1015, 1023, 1023)),
        'u': (16, 11, (65534, 65534, 32382, 32382, 32382, 32382, 32382, 32382, 32382, 32510, 32767, 16383)),
        'v': (15, 11, (32671, 32671, 32542, 16286, 16284, 16380, 8188, 8184, 4088, 4080, 4080, 2032)),
        'w': (21, 11, (2092959, 2097119, 2088910, 1048542, 1048574, 1048572, 524284, 524284, 524280, 259064, 259064, 259056)),
        'x': (14, 11, (16383, 16383, 8190, 8188, 4088, 2040, 2040, 4092, 4092, 8190, 16383, 16383)),
        'y': (15, 11, (32671, 32671, 32542, 16286, 16316, 16380, 8184, 8184, 4088, 4080, 2032, 2016, 2016, 29632, 30656, 32640, 32640)),
        'z': (12, 11, (4095, 2079, 2110, 124, 124, 248, 496, 992, 992, 1985, 3969, 4095)),
        '0': (14, 5, (1008, 1560, 3612, 7182, 7182, 15375, 15375, 15375, 15375, 15375, 15375, 15375, 15375, 7182, 7182, 3612, 1560, 1008)),
        '1': (11, 5, (1020, 2044, 2044, 2044, 1788, 252, 252, 252, 252, 252, 252, 252, 252, 252, 252, 252, 2047, 2047)),
        '2': (13, 5, (2032, 7228, 6174, 4111, 15, 15, 15, 15, 30, 28, 56, 240, 448, 1793, 3585, 8191, 8191, 8191)),
        '3': (13, 5, (8190, 8191, 7807, 6207, 6207, 63, 127, 1023, 1023, 1023, 127, 63, 31, 6175, 6207, 7807, 8191, 8190)),
        '4': (15, 5, (508, 1020, 2044, 2044, 4092, 8188, 7932, 16124, 31996, 30972, 30972, 32767, 32767, 32767, 252, 252, 2047, 2047)),
        '5': (13, 5, (8191, 8191, 8191, 8191, 7168, 8184, 8190, 8191, 7807, 7231, 31, 31, 31, 6175, 6207, 7295, 8191, 8190)),
        '6': (14, 5, (4095, 8191, 16271, 16135, 16128, 16380, 16382, 16383, 16191, 15935, 15903, 15903, 15903, 15903, 16191, 16191, 8191, 8190)),
        '7': (13, 5, (8191, 8191, 8191, 4103, 4102, 14, 12, 28, 24, 56, 48, 112, 96, 224, 192, 448, 384, 896)),
        '8': (14, 5, (1008, 3900, 7710, 7710, 7710, 7710, 7710, 3900, 1008, 7710, 7182, 15375, 15375, 15375, 15375, 7182, 7708, 2040)),
        '9': (14, 5, (8188, 16382, 16191, 15935, 15903, 15903, 15903, 15903, 16191, 16191, 16383, 8191, 4095, 63, 14399, 15487, 16382, 16380)),
    }),
}
