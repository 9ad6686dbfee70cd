"""Fixed coefficient tables used by the structure predictor.

AFFINE_PREFIX_28 gives (a, b) with Q(N+k) = a*N + b for offsets k = 1..28 of
zero-extended identity conditions; SPORADIC_29_34 continues through offset
34.  Both match what the symbolic derivation produces and are kept as data
so prediction does not re-derive them.

CLOSING_TAIL_0 lists (offset, c, d, e, f) for the 158 terms that close a
classification-0 run: the term at absolute index A_j + offset equals
c*(A_j*D) + d*A_j + e*B_j + f, where D = (A_j - A_{j-1} - 2) / 5.  The last
row (offset 160) is the final 0 that ends the sequence at A_j + 161.
"""

from __future__ import annotations

AFFINE_PREFIX_28: tuple[tuple[int, int], ...] = (
    (0, 3), (1, 1), (1, 2), (0, 5), (1, 3), (0, 6), (0, 7),
    (1, 4), (1, 6), (0, 10), (0, 8), (1, 6), (1, 10), (0, 12),
    (1, 7), (0, 14), (1, 12), (0, 11), (1, 11), (1, 15), (0, 16),
    (0, 13), (0, 17), (0, 15), (1, 14), (0, 20), (0, 20), (2, 8),
)

SPORADIC_29_34: tuple[tuple[int, int], ...] = (
    (1, 6), (0, 24), (0, 32), (2, 4), (0, 3), (0, 32),
)

CLOSING_TAIL_0: tuple[tuple[int, int, int, int, int], ...] = (
    (3, 0, 0, 0, 6),
    (4, 0, 0, 0, 7),
    (5, 0, 0, 0, 8),
    (6, 0, 0, 0, 8),
    (7, 0, 0, 0, 10),
    (8, 1, 0, 1, 3),
    (9, 0, 0, 0, 5),
    (10, 0, 0, 0, 8),
    (11, 0, 0, 0, 14),
    (12, 0, 0, 0, 10),
    (13, 0, 0, 0, 11),
    (14, 0, 0, 0, 13),
    (15, 0, 1, 0, 7),
    (16, 0, 0, 0, 15),
    (17, 0, 1, 0, 10),
    (18, 0, 0, 0, 14),
    (19, 0, 0, 0, 17),
    (20, 0, 0, 0, 14),
    (21, 0, 0, 0, 17),
    (22, 1, 0, 1, 11),
    (23, 0, 0, 0, 8),
    (24, 0, 0, 0, 15),
    (25, 0, 1, 0, 18),
    (26, 0, 0, 0, 22),
    (27, 0, 0, 0, 17),
    (28, 0, 0, 0, 22),
    (29, 0, 0, 0, 20),
    (30, 1, 0, 1, 11),
    (31, 0, 0, 0, 14),
    (32, 0, 0, 0, 14),
    (33, 0, 0, 0, 34),
    (34, 1, 0, 1, 14),
    (35, 0, 0, 0, 5),
    (36, 0, 0, 0, 14),
    (37, 0, 0, 0, 22),
    (38, 0, 0, 0, 30),
    (39, 0, 1, 0, 15),
    (40, 0, 0, 0, 33),
    (41, 1, 0, 1, 29),
    (42, 0, 0, 0, 5),
    (43, 0, 0, 0, 30),
    (44, 0, 1, 0, 28),
    (45, 0, 1, 0, 24),
    (46, 0, 0, 0, 40),
    (47, 0, 0, 0, 33),
    (48, 1, 1, 1, 10),
    (49, 0, 0, 0, 15),
    (50, 0, 0, 0, 5),
    (51, 0, 0, 0, 54),
    (52, 0, 0, 0, 36),
    (53, 0, 1, 0, 15),
    (54, 0, 0, 0, 53),
    (55, 0, 1, 0, 40),
    (56, 0, 0, 0, 22),
    (57, 0, 0, 0, 22),
    (58, 0, 0, 0, 28),
    (59, 0, 0, 0, 36),
    (60, 0, 0, 0, 29),
    (61, 0, 1, 0, 32),
    (62, 0, 0, 0, 64),
    (63, 0, 0, 0, 36),
    (64, 1, 0, 1, 22),
    (65, 0, 0, 0, 20),
    (66, 0, 0, 0, 40),
    (67, 0, 0, 0, 50),
    (68, 0, 0, 0, 36),
    (69, 0, 0, 0, 51),
    (70, 1, 0, 1, 31),
    (71, 0, 0, 0, 14),
    (72, 0, 0, 0, 28),
    (73, 0, 1, 0, 60),
    (74, 0, 0, 0, 54),
    (75, 0, 0, 0, 32),
    (76, 1, 1, 1, 39),
    (77, 0, 1, 0, 24),
    (78, 0, 0, 0, 54),
    (79, 0, 1, 0, 73),
    (80, 0, 0, 0, 29),
    (81, 0, 0, 0, 44),
    (82, 0, 1, 0, 45),
    (83, 0, 1, 0, 53),
    (84, 0, 0, 0, 70),
    (85, 0, 1, 0, 39),
    (86, 0, 0, 0, 62),
    (87, 0, 1, 0, 66),
    (88, 0, 0, 0, 44),
    (89, 0, 1, 0, 47),
    (90, 0, 0, 0, 83),
    (91, 1, 0, 1, 47),
    (92, 0, 0, 0, 5),
    (93, 0, 0, 0, 44),
    (94, 0, 1, 0, 52),
    (95, 0, 0, 0, 97),
    (96, 0, 0, 0, 49),
    (97, 2, 1, 2, 10),
    (98, 0, 0, 0, 15),
    (99, 0, 0, 0, 70),
    (100, 1, 1, 1, 50),
    (101, 0, 0, 0, 14),
    (102, 0, 0, 0, 44),
    (103, 0, 1, 0, 83),
    (104, 0, 0, 0, 50),
    (105, 0, 1, 0, 62),
    (106, 0, 0, 0, 66),
    (107, 1, 0, 1, 74),
    (108, 0, 0, 0, 5),
    (109, 0, 0, 0, 50),
    (110, 0, 1, 0, 91),
    (111, 0, 1, 0, 52),
    (112, 0, 0, 0, 81),
    (113, 0, 0, 0, 75),
    (114, 0, 1, 0, 49),
    (115, 0, 0, 0, 99),
    (116, 0, 1, 0, 77),
    (117, 0, 0, 0, 54),
    (118, 1, 0, 1, 63),
    (119, 0, 0, 0, 20),
    (120, 1, 1, 1, 50),
    (121, 0, 0, 0, 14),
    (122, 0, 0, 0, 5),
    (123, 1, 0, 1, 113),
    (124, 0, 0, 0, 20),
    (125, 0, 1, 0, 62),
    (126, 0, 0, 0, 130),
    (127, 0, 1, 0, 65),
    (128, 0, 0, 0, 66),
    (129, 0, 0, 0, 100),
    (130, 2, 0, 2, 33),
    (131, 0, 0, 0, 14),
    (132, 1, 0, 1, 63),
    (133, 0, 0, 0, 20),
    (134, 0, 1, 0, 49),
    (135, 0, 0, 0, 185),
    (136, 0, 0, 0, 92),
    (137, 0, 2, 0, 24),
    (138, 0, 0, 0, 40),
    (139, 0, 0, 0, 70),
    (140, 2, 1, 2, 81),
    (141, 0, 0, 0, 14),
    (142, 0, 0, 0, 66),
    (143, 0, 1, 0, 124),
    (144, 0, 0, 0, 74),
    (145, 0, 0, 0, 35),
    (146, 0, 1, 0, 80),
    (147, 0, 0, 0, 148),
    (148, 1, 0, 1, 68),
    (149, 0, 0, 0, 5),
    (150, 0, 0, 0, 35),
    (151, 0, 2, 0, 157),
    (152, 0, 0, 0, 54),
    (153, 0, 0, 0, 70),
    (154, 1, 1, 1, 120),
    (155, 0, 1, 0, 39),
    (156, 0, 0, 0, 117),
    (157, 0, 0, 0, 151),
    (158, 1, 0, 1, 39),
    (159, 1, 0, 1, 3),
    (160, 0, 0, 0, 0),
)

assert len(CLOSING_TAIL_0) == 158
assert [row[0] for row in CLOSING_TAIL_0] == list(range(3, 161))
