"""Published benchmark values used by ``repro`` and the acceptance tests.

Rows are copied verbatim. ``n`` is 0-based in tables 1, 2, 5, 6 and
1-based in tables 3, 4, 7, as printed.
"""

import math

# harmonic oscillator -d2/dx2 + x^2, N=50, L in [5.5, 8]: (n, E, eps, L)
TABLE1 = [
    (0, 1, 1.0000000000, 6.86),
    (1, 3, 3.0000000000, 7.55),
    (2, 5, 5.0000000000, 7.09),
    (3, 7, 7.0000000000, 7.14),
    (4, 9, 9.0000000000, 7.61),
    (5, 11, 11.0000000000, 7.49),
    (6, 13, 13.0000000000, 6.85),
    (7, 15, 15.0000000000, 7.07),
    (8, 17, 17.0000000000, 7.27),
    (9, 19, 19.0000000000, 7.43),
    (10, 21, 21.0000000003, 7.46),
    (11, 23, 23.0000000017, 7.49),
]

# quartic anharmonic -d2/dx2 + x^2 + x^4, N=20, L in [3, 4]: (n, E, eps, L)
TABLE2 = [
    (0, 1.3923516415, 1.3923516415, 3.4),
    (1, 4.6488127042, 4.6488127042, 3.4),
    (2, 8.6550499577, 8.6550499586, 3.4),
    (3, 13.1568038980, 13.1568038994, 3.7),
    (4, 18.0575574363, 18.0575574558, 3.4),
    (5, 23.2974414512, 23.2974415625, 3.4),
]

# radial oscillator in d dimensions, N=40, L in [3, 12]: (d, l, n, E, eps, L)
TABLE3 = [
    (3, 0, 1, 3, 3.00000000, 6.00), (3, 0, 5, 19, 19.00000001, 7.00), (3, 0, 10, 39, 39.00000001, 8.75),
    (3, 1, 1, 5, 5.00007348, 4.50), (3, 1, 5, 21, 21.00167944, 6.25), (3, 1, 10, 41, 41.00907276, 7.75),
    (3, 2, 1, 7, 7.00000000, 6.00), (3, 2, 5, 23, 23.00000001, 7.75), (3, 2, 10, 43, 43.00000001, 9.25),
    (3, 3, 1, 9, 9.00000001, 6.00), (3, 3, 5, 25, 25.00000076, 7.25), (3, 3, 10, 45, 45.00002070, 8.50),
    (4, 0, 1, 4, 4.00073469, 4.25), (4, 0, 5, 20, 20.00745550, 6.00), (4, 0, 10, 40, 40.02454449, 7.50),
    (4, 1, 1, 6, 6.00000262, 5.00), (4, 1, 5, 22, 22.00011370, 6.50), (4, 1, 10, 42, 42.00094014, 8.00),
    (4, 2, 1, 8, 8.00000002, 6.00), (4, 2, 5, 24, 24.00000248, 7.25), (4, 2, 10, 44, 44.00004592, 8.50),
    (4, 3, 1, 10, 10.00000000, 6.00), (4, 3, 5, 26, 26.00000008, 7.50), (4, 3, 10, 46, 46.00000274, 8.75),
    (5, 0, 1, 5, 5.00007348, 4.50), (5, 0, 5, 21, 21.00167944, 6.25), (5, 0, 10, 41, 41.00907276, 7.75),
    (5, 1, 1, 7, 7.00000000, 6.00), (5, 1, 5, 23, 23.00000001, 7.75), (5, 1, 10, 43, 43.00000001, 9.25),
    (5, 2, 1, 9, 9.00000001, 6.00), (5, 2, 5, 25, 25.00000076, 7.25), (5, 2, 10, 45, 45.00002070, 8.50),
    (5, 3, 1, 11, 11.00000001, 6.00), (5, 3, 5, 27, 27.00000000, 8.00), (5, 3, 10, 47, 47.00000001, 10.00),
]

# hydrogen -d2/dr2 + l(l+1)/r^2 - 1/r, N=250, b in [3, 190]: (l, n, E, eps, b)
TABLE4 = [
    (0, 1, -0.2500000000, -0.2499790730, 17.5),
    (0, 2, -0.06250000000, -0.06246859682, 40.5),
    (0, 3, -0.02777777778, -0.02773301831, 70.5),
    (0, 4, -0.01562500000, -0.01556528040, 107),
    (1, 1, -0.06250000000, -0.06231120892, 33),
    (1, 2, -0.02777777778, -0.02747649731, 60),
    (1, 3, -0.01562500000, -0.01526320869, 94),
    (1, 4, -0.01000000000, -0.009656788911, 143),
    (2, 1, -0.02777777778, -0.02777640178, 75),
    (2, 2, -0.01562500000, -0.01561644406, 108),
    (2, 3, -0.01000000000, -0.009970374676, 146),
    (2, 4, -0.006944444444, -0.006872824074, 189),
]

# confined oscillator -1/2 d2/dx2 + x^2/2 on [-0.5, 0.5], N=250: (n, E, eps)
TABLE5 = [
    (0, 4.951123323264, 4.951129323244),
    (1, 19.774534178560, 19.774534179209),
    (2, 44.452073828864, 44.452073829725),
    (3, 78.996921150976, 78.996921150748),
    (4, 123.410710456832, 123.410710456280),
    (5, 177.693843822080, 177.693843818558),
    (6, 241.846458758144, 241.846458765623),
    (7, 315.868612673536, 315.868612686280),
    (8, 399.760332976128, 399.760332979135),
    (9, 493.521634054144, 493.521634068796),
    (10, 597.152524107776, 597.152524136545),
    (11, 710.653008064512, 710.653008103290),
]

# V0 sin^2 x confined to |x| <= pi/2, N=25, L = pi/2: V0 -> eps for n = 0..5
TABLE6 = {
    0.1: (1.024922118883, 4.049947916808, 9.050038818610, 16.050020833189, 25.050013020839, 36.050008928573),
    1.0: (1.242428825987, 4.494793078632, 9.503664867046, 16.502081901038, 25.501302132228, 36.500892873766),
    5.0: (2.082985293205, 6.370661125009, 11.569339156939, 18.551201398403, 27.532566336109, 38.522331587359),
}

_S3, _S5, _S7 = math.sqrt(3), math.sqrt(5), math.sqrt(7)

# confined hydrogen, A=1, window [0, b], N=250: (l, n, b, E, eps)
TABLE7 = [
    (0, 1, 4.0, -1 / 16, -0.0624999668),
    (1, 1, 12.0, -1 / 36, -0.0277777498),
    (2, 1, 24.0, -1 / 64, -0.0156250000),
    (3, 1, 40.0, -1 / 100, -0.0100000000),
    (0, 1, 3 * (3 - _S3), -1 / 36, -0.0277777466),
    (0, 2, 3 * (3 + _S3), -1 / 36, -0.0277775785),
    (1, 1, 4 * (5 - _S5), -1 / 64, -0.0156249729),
    (1, 2, 4 * (5 + _S5), -1 / 64, -0.0156248833),
    (2, 1, 5 * (7 - _S7), -1 / 100, -0.0100000000),
    (2, 2, 5 * (7 + _S7), -1 / 100, -0.00999999997),
    (3, 1, 36.0, -1 / 144, -0.006944444438),
    (3, 2, 72.0, -1 / 144, -0.006944444431),
]

# r^2 + B r^-4 + C r^-6 in d=3, l=0, N=100: (A, B, C, E0, eps, a, b)
SINGULAR = [
    (1, 1, 1, 5, 5.00000003, 0.01, 5.2),
    (1, 9, 9, 7, 7.00000110, 0.01, 5.1),
]
