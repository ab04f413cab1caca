"""Published primitive triples (a, b, c), a < b < 10^4, whose E_{a,b} has rank 0.

Each was reported with an upper rank bound of 0. Used as regression data
for the scanner.
"""

KNOWN_RANK_ZERO = (
    (3, 4, 5),
    (5, 12, 13),
    (12, 35, 37),
    (13, 84, 85),
    (19, 180, 181),
    (24, 143, 145),
    (33, 56, 65),
    (64, 1023, 1025),
    (69, 2380, 2381),
    (115, 252, 277),
    (180, 299, 349),
    (319, 360, 481),
    (339, 6380, 6389),
    (473, 864, 985),
    (540, 629, 829),
    (581, 3420, 3469),
    (588, 2365, 2437),
    (612, 1075, 1237),
    (660, 2989, 3061),
    (685, 9372, 9397),
    (780, 6059, 6109),
    (913, 3384, 3505),
    (924, 5893, 5965),
    (949, 2580, 2749),
    (1403, 1596, 2125),
    (1507, 9324, 9445),
    (1820, 8181, 8381),
    (2059, 2100, 2941),
    (2147, 6204, 6565),
    (2299, 7140, 7501),
    (2380, 4611, 5189),
    (2436, 2923, 3805),
    (2725, 5628, 6253),
    (3267, 6956, 7685),
    (3612, 6955, 7837),
    (3751, 6840, 7801),
    (4180, 8541, 9509),
    (4251, 5180, 6701),
    (4469, 5100, 6781),
    (4740, 5341, 7141),
    (5365, 9828, 11197),
    (5633, 7656, 9505),
    (6125, 6612, 9013),
    (6204, 7747, 9925),
    (6811, 8460, 10861),
)
