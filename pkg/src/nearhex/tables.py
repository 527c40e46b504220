"""
Published values the computation is checked against, embedded verbatim.

``TABLE3`` row fields: type number, core points, core lines, number of core
points of order 0..4, composition over H1..H8, the three layer labels as
printed, split mark (STAR / DAGGER / None), footnote numbers attached to the
row.
"""

from dataclasses import dataclass

STAR, DAGGER = "star", "dagger"

CONSTANTS = {
    "gq_points": 15,
    "gq_lines": 15,
    "nh_points": 45,
    "nh_lines": 60,
    "hyperplanes": 1023,
    "gq_hyperplanes": 31,
    "veldkamp_lines": 174251,
    "group_order": 4320,
    "conjugacy_classes": 33,
    "line_orbits": 158,
    "burnside_total": 682560,
    "gq_hyperplane_orbits": 3,
    "gq_line_orbits": 5,
    "hyperplane_orbits": 8,
}

# name, partition, orbit size, stabilizer, stabilizer order
TABLE1 = (
    ("H1", (3, 3), 30, "S3 x S3 x S2 x S2", 144),
    ("H2", (4, 2), 45, "S4 x S2 x S2", 96),
    ("H3", (5, 1), 18, "S5 x S2", 240),
    ("H4", (2, 2, 1, 1), 270, "S2 x S2 x S2 x S2", 16),
    ("H5", (2, 2, 2), 90, "S2 x S2 x S2 x S3", 48),
    ("H6", (3, 1, 1, 1), 120, "S3 x S3", 36),
    ("H7", (3, 2, 1), 360, "S3 x S2", 12),
    ("H8", (4, 1, 1), 90, "S4 x S2", 48),
)

# class, Fix(1), Fix(2), Fix(3), class size, product
TABLE2 = (
    ('id', 174251, 0, 0, 1, 174251),
    ('(1 2)', 10795, 384, 0, 15, 167685),
    ('(1 2)(3 4)', 651, 480, 0, 45, 50895),
    ('(1 2)(3 4)(5 6)', 651, 480, 0, 15, 16965),
    ('(1 2 3)', 651, 0, 5, 40, 26240),
    ('(1 2 3)(4 5 6)', 1, 0, 85, 40, 3440),
    ('(1 2 3 4)', 35, 24, 0, 90, 5310),
    ('(1 2 3 4)(5 6)', 35, 24, 0, 90, 5310),
    ('(1 2 3)(4 5)', 35, 24, 5, 120, 7680),
    ('(1 2 3 4 5)', 1, 0, 0, 144, 144),
    ('(1 2 3 4 5 6)', 1, 0, 5, 120, 720),
    ('(7 8)', 155, 496, 0, 3, 1953),
    ('(1 2)(7 8)', 155, 496, 0, 45, 29295),
    ('(1 2)(3 4)(7 8)', 155, 496, 0, 135, 87885),
    ('(1 2)(3 4)(5 6)(7 8)', 155, 496, 0, 45, 29295),
    ('(1 2 3)(7 8)', 7, 28, 1, 120, 4320),
    ('(1 2 3)(4 5 6)(7 8)', 0, 1, 5, 120, 720),
    ('(1 2 3 4)(7 8)', 7, 28, 0, 270, 9450),
    ('(1 2 3 4)(5 6)(7 8)', 7, 28, 0, 270, 9450),
    ('(1 2 3)(4 5)(7 8)', 7, 28, 1, 360, 12960),
    ('(1 2 3 4 5)(7 8)', 0, 1, 0, 432, 432),
    ('(1 2 3 4 5 6)(7 8)', 0, 1, 1, 360, 720),
    ('(7 8 9)', 0, 0, 1023, 2, 2046),
    ('(1 2)(7 8 9)', 0, 0, 255, 30, 7650),
    ('(1 2)(3 4)(7 8 9)', 0, 0, 63, 90, 5670),
    ('(1 2)(3 4)(5 6)(7 8 9)', 0, 0, 63, 30, 1890),
    ('(1 2 3)(7 8 9)', 1, 0, 64, 80, 5200),
    ('(1 2 3)(4 5 6)(7 8 9)', 35, 0, 8, 80, 3440),
    ('(1 2 3 4)(7 8 9)', 0, 0, 15, 180, 2700),
    ('(1 2 3 4)(5 6)(7 8 9)', 0, 0, 15, 180, 2700),
    ('(1 2 3)(4 5)(7 8 9)', 1, 0, 16, 240, 4080),
    ('(1 2 3 4 5)(7 8 9)', 0, 0, 3, 288, 864),
    ('(1 2 3 4 5 6)(7 8 9)', 1, 0, 4, 240, 1200),
)
TABLE2_TOTAL = 682560

TABLE3 = (
    (1, 27, 27, (0, 0, 0, 27, 0), (3, 0, 0, 0, 0, 0, 0, 0), ('grid', 'grid', 'grid'), None, ()),
    (2, 25, 24, (0, 0, 10, 10, 5), (2, 1, 0, 0, 0, 0, 0, 0), ('full', 'g-perp', 'g-perp'), None, ()),
    (3, 23, 19, (0, 0, 12, 11, 0), (2, 0, 0, 1, 0, 0, 0, 0), ('grid', 'g-perp', 'grid'), None, ()),
    (4, 21, 20, (0, 0, 6, 12, 3), (0, 3, 0, 0, 0, 0, 0, 0), ('full', 'line', 'line'), None, ()),
    (5, 21, 18, (0, 6, 0, 12, 3), (1, 1, 1, 0, 0, 0, 0, 0), ('full', 'unitr', 'unitr'), None, ()),
    (6, 21, 18, (0, 6, 0, 12, 3), (0, 3, 0, 0, 0, 0, 0, 0), ('full', 'tritr', 'tritr'), None, ()),
    (7, 21, 16, (0, 2, 12, 6, 1), (1, 1, 0, 1, 0, 0, 0, 0), ('perp', 'grid', 'g-perp'), None, ()),
    (8, 21, 16, (0, 0, 18, 0, 3), (0, 3, 0, 0, 0, 0, 0, 0), ('perp', 'perp', 'perp'), None, ()),
    (9, 19, 15, (0, 0, 12, 7, 0), (1, 0, 0, 2, 0, 0, 0, 0), ('grid', 'g-perp', 'g-perp'), None, ()),
    (10, 19, 13, (0, 4, 10, 5, 0), (1, 0, 0, 2, 0, 0, 0, 0), ('grid', 'g-perp', 'g-perp'), None, ()),
    (11, 19, 12, (0, 6, 9, 4, 0), (1, 1, 0, 0, 0, 0, 1, 0), ('perp', 'grid', 'unitr'), None, ()),
    (12, 17, 16, (0, 2, 0, 14, 1), (0, 1, 2, 0, 0, 0, 0, 0), ('full', 'point', 'point'), None, ()),
    (13, 17, 12, (0, 2, 12, 2, 1), (0, 1, 0, 2, 0, 0, 0, 0), ('perp', 'g-perp', 'g-perp'), None, ()),
    (14, 17, 12, (0, 2, 11, 4, 0), (0, 1, 0, 2, 0, 0, 0, 0), ('grid', 'line', 'g-perp'), None, ()),
    (15, 17, 10, (0, 8, 6, 2, 1), (1, 0, 0, 1, 1, 0, 0, 0), ('g-perp', 'g-perp', 'perp'), None, ()),
    (16, 17, 10, (1, 4, 10, 2, 0), (1, 0, 0, 1, 0, 0, 1, 0), ('grid', 'unitr', 'g-perp'), None, ()),
    (17, 17, 10, (0, 8, 7, 0, 2), (0, 2, 0, 0, 1, 0, 0, 0), ('perp', 'line', 'perp'), None, ()),
    (18, 17, 10, (1, 4, 10, 2, 0), (0, 1, 0, 2, 0, 0, 0, 0), ('grid', 'tritr', 'g-perp'), None, ()),
    (19, 17, 10, (0, 8, 6, 2, 1), (0, 1, 0, 2, 0, 0, 0, 0), ('perp', 'g-perp', 'g-perp'), None, ()),
    (20, 17, 9, (2, 6, 6, 3, 0), (1, 0, 1, 0, 0, 0, 1, 0), ('ovoid', 'unitr', 'grid'), None, ()),
    (21, 17, 9, (0, 8, 8, 1, 0), (1, 0, 0, 1, 0, 1, 0, 0), ('perp', 'g-perp', 'g-perp'), None, ()),
    (22, 17, 9, (0, 9, 6, 2, 0), (0, 2, 0, 0, 0, 1, 0, 0), ('perp', 'tritr', 'perp'), None, ()),
    (23, 15, 11, (0, 0, 12, 3, 0), (0, 0, 0, 3, 0, 0, 0, 0), ('g-perp', 'g-perp', 'g-perp'), None, ()),
    (24, 15, 9, (0, 6, 6, 3, 0), (1, 0, 0, 0, 0, 0, 2, 0), ('unitr', 'grid', 'unitr'), None, ()),
    (25, 15, 9, (0, 6, 6, 3, 0), (0, 0, 0, 3, 0, 0, 0, 0), ('g-perp', 'g-perp', 'g-perp'), None, (1,)),
    (26, 15, 9, (0, 6, 6, 3, 0), (0, 0, 0, 3, 0, 0, 0, 0), ('g-perp', 'g-perp', 'g-perp'), None, (1,)),
    (27, 15, 8, (2, 4, 7, 2, 0), (0, 1, 0, 1, 0, 0, 1, 0), ('grid', 'tritr', 'unitr'), None, ()),
    (28, 15, 8, (2, 3, 9, 1, 0), (0, 1, 0, 1, 0, 0, 1, 0), ('line', 'grid', 'unitr'), None, ()),
    (29, 15, 8, (2, 4, 7, 2, 0), (0, 0, 1, 2, 0, 0, 0, 0), ('grid', 'unitr', 'unitr'), None, ()),
    (30, 15, 8, (0, 6, 9, 0, 0), (0, 0, 0, 3, 0, 0, 0, 0), ('g-perp', 'g-perp', 'g-perp'), None, ()),
    (31, 15, 7, (1, 8, 5, 1, 0), (1, 0, 0, 0, 0, 1, 1, 0), ('perp', 'g-perp', 'unitr'), None, ()),
    (32, 15, 7, (4, 2, 8, 1, 0), (1, 0, 0, 0, 0, 0, 2, 0), ('unitr', 'grid', 'unitr'), None, ()),
    (33, 15, 7, (1, 8, 5, 1, 0), (0, 1, 0, 1, 0, 0, 1, 0), ('perp', 'unitr', 'g-perp'), None, ()),
    (34, 15, 7, (0, 9, 6, 0, 0), (0, 0, 0, 3, 0, 0, 0, 0), ('g-perp', 'g-perp', 'g-perp'), None, ()),
    (35, 15, 6, (2, 10, 1, 2, 0), (1, 0, 0, 0, 1, 0, 1, 0), ('perp', 'unitr', 'g-perp'), None, ()),
    (36, 15, 6, (3, 6, 6, 0, 0), (1, 0, 0, 0, 0, 0, 2, 0), ('ovoid', 'g-perp', 'g-perp'), None, ()),
    (37, 15, 6, (2, 9, 3, 1, 0), (0, 1, 1, 0, 0, 0, 1, 0), ('ovoid', 'unitr', 'perp'), None, ()),
    (38, 15, 5, (0, 15, 0, 0, 0), (0, 0, 3, 0, 0, 0, 0, 0), ('ovoid', 'ovoid', 'ovoid'), None, ()),
    (39, 13, 8, (0, 4, 8, 0, 1), (0, 1, 0, 0, 2, 0, 0, 0), ('perp', 'line', 'line'), None, ()),
    (40, 13, 8, (0, 3, 9, 1, 0), (0, 1, 0, 0, 0, 0, 2, 0), ('line', 'grid', 'point'), None, ()),
    (41, 13, 8, (0, 4, 7, 2, 0), (0, 0, 0, 2, 1, 0, 0, 0), ('line', 'g-perp', 'g-perp'), None, ()),
    (42, 13, 7, (2, 2, 8, 1, 0), (0, 0, 1, 1, 0, 0, 1, 0), ('grid', 'unitr', 'point'), None, ()),
    (43, 13, 6, (0, 9, 3, 1, 0), (0, 1, 0, 0, 0, 2, 0, 0), ('perp', 'tritr', 'tritr'), None, ()),
    (44, 13, 6, (0, 9, 3, 1, 0), (0, 1, 0, 0, 0, 2, 0, 0), ('perp', 'line', 'line'), None, ()),
    (45, 13, 6, (4, 0, 9, 0, 0), (0, 1, 0, 0, 0, 0, 2, 0), ('point', 'grid', 'tritr'), None, ()),
    (46, 13, 6, (0, 10, 2, 1, 0), (0, 1, 0, 0, 0, 0, 2, 0), ('perp', 'g-perp', 'point'), None, ()),
    (47, 13, 6, (0, 9, 3, 1, 0), (0, 1, 0, 0, 0, 0, 2, 0), ('perp', 'unitr', 'unitr'), None, ()),
    (48, 13, 6, (1, 6, 6, 0, 0), (0, 0, 0, 2, 0, 1, 0, 0), ('tritr', 'g-perp', 'g-perp'), None, ()),
    (49, 13, 6, (0, 8, 5, 0, 0), (0, 0, 0, 2, 0, 1, 0, 0), ('line', 'g-perp', 'g-perp'), None, ()),
    (50, 13, 6, (1, 6, 6, 0, 0), (0, 0, 0, 2, 0, 0, 1, 0), ('g-perp', 'g-perp', 'unitr'), STAR, ()),
    (51, 13, 5, (2, 8, 2, 1, 0), (0, 1, 0, 0, 1, 1, 0, 0), ('perp', 'line', 'tritr'), None, ()),
    (52, 13, 5, (2, 8, 2, 1, 0), (0, 0, 1, 1, 0, 1, 0, 0), ('perp', 'unitr', 'unitr'), None, ()),
    (53, 13, 5, (2, 8, 2, 1, 0), (0, 0, 0, 2, 1, 0, 0, 0), ('tritr', 'g-perp', 'g-perp'), None, ()),
    (54, 13, 5, (0, 11, 2, 0, 0), (0, 0, 0, 2, 1, 0, 0, 0), ('line', 'g-perp', 'g-perp'), None, ()),
    (55, 13, 5, (2, 7, 4, 0, 0), (0, 0, 0, 2, 0, 1, 0, 0), ('tritr', 'g-perp', 'g-perp'), None, ()),
    (56, 13, 5, (2, 8, 2, 1, 0), (0, 0, 0, 2, 0, 0, 1, 0), ('g-perp', 'g-perp', 'unitr'), None, ()),
    (57, 13, 5, (2, 7, 4, 0, 0), (0, 0, 0, 2, 0, 0, 1, 0), ('unitr', 'g-perp', 'g-perp'), None, ()),
    (58, 13, 4, (4, 8, 0, 0, 1), (1, 0, 0, 0, 1, 0, 0, 1), ('perp', 'unitr', 'unitr'), None, ()),
    (59, 13, 4, (4, 8, 0, 0, 1), (0, 1, 1, 0, 0, 0, 0, 1), ('perp', 'ovoid', 'point'), None, ()),
    (60, 13, 4, (4, 8, 0, 0, 1), (0, 1, 0, 1, 0, 0, 0, 1), ('perp', 'unitr', 'unitr'), None, ()),
    (61, 13, 4, (4, 8, 0, 0, 1), (0, 1, 0, 0, 2, 0, 0, 0), ('perp', 'tritr', 'tritr'), None, ()),
    (62, 13, 4, (4, 7, 1, 1, 0), (0, 1, 0, 0, 0, 2, 0, 0), ('tritr', 'tritr', 'perp'), None, ()),
    (63, 13, 4, (4, 7, 1, 1, 0), (0, 1, 0, 0, 0, 0, 2, 0), ('line', 'g-perp', 'ovoid'), None, ()),
    (64, 13, 4, (4, 7, 1, 1, 0), (0, 1, 0, 0, 0, 0, 2, 0), ('perp', 'unitr', 'unitr'), None, ()),
    (65, 13, 4, (4, 6, 3, 0, 0), (0, 1, 0, 0, 0, 0, 2, 0), ('tritr', 'g-perp', 'ovoid'), None, ()),
    (66, 13, 4, (4, 8, 0, 0, 1), (0, 0, 1, 1, 1, 0, 0, 0), ('perp', 'unitr', 'unitr'), None, ()),
    (67, 13, 3, (6, 6, 0, 1, 0), (1, 0, 0, 0, 0, 1, 0, 1), ('perp', 'unitr', 'unitr'), None, ()),
    (68, 13, 3, (6, 6, 0, 1, 0), (1, 0, 0, 0, 0, 0, 1, 1), ('ovoid', 'g-perp', 'unitr'), None, ()),
    (69, 11, 6, (2, 0, 9, 0, 0), (0, 0, 1, 0, 0, 0, 2, 0), ('grid', 'point', 'point'), None, ()),
    (70, 11, 5, (0, 7, 4, 0, 0), (0, 0, 0, 1, 0, 0, 2, 0), ('g-perp', 'g-perp', 'point'), None, ()),
    (71, 11, 4, (2, 7, 1, 1, 0), (0, 0, 1, 0, 1, 0, 1, 0), ('perp', 'unitr', 'point'), None, ()),
    (72, 11, 4, (2, 7, 1, 1, 0), (0, 0, 0, 1, 1, 0, 1, 0), ('line', 'g-perp', 'unitr'), None, ()),
    (73, 11, 4, (2, 6, 3, 0, 0), (0, 0, 0, 1, 1, 0, 1, 0), ('line', 'unitr', 'g-perp'), None, ()),
    (74, 11, 4, (2, 6, 3, 0, 0), (0, 0, 0, 1, 0, 1, 1, 0), ('unitr', 'tritr', 'g-perp'), None, ()),
    (75, 11, 4, (2, 6, 3, 0, 0), (0, 0, 0, 1, 0, 1, 1, 0), ('line', 'unitr', 'g-perp'), None, ()),
    (76, 11, 4, (2, 6, 3, 0, 0), (0, 0, 0, 1, 0, 0, 2, 0), ('g-perp', 'unitr', 'unitr'), None, (2,)),
    (77, 11, 4, (2, 6, 3, 0, 0), (0, 0, 0, 1, 0, 0, 2, 0), ('g-perp', 'unitr', 'unitr'), None, (2,)),
    (78, 11, 4, (1, 8, 2, 0, 0), (0, 0, 0, 1, 0, 0, 2, 0), ('point', 'g-perp', 'g-perp'), None, ()),
    (79, 11, 3, (4, 6, 0, 1, 0), (0, 1, 0, 0, 0, 0, 1, 1), ('perp', 'point', 'unitr'), None, ()),
    (80, 11, 3, (4, 6, 0, 1, 0), (0, 0, 1, 0, 0, 1, 1, 0), ('perp', 'unitr', 'point'), None, ()),
    (81, 11, 3, (2, 9, 0, 0, 0), (0, 0, 1, 0, 0, 0, 2, 0), ('unitr', 'unitr', 'ovoid'), None, ()),
    (82, 11, 3, (4, 6, 0, 1, 0), (0, 0, 0, 2, 0, 0, 0, 1), ('unitr', 'g-perp', 'unitr'), None, ()),
    (83, 11, 3, (4, 6, 0, 1, 0), (0, 0, 0, 1, 1, 0, 1, 0), ('tritr', 'unitr', 'g-perp'), None, ()),
    (84, 11, 3, (4, 5, 2, 0, 0), (0, 0, 0, 1, 0, 1, 1, 0), ('tritr', 'g-perp', 'unitr'), None, ()),
    (85, 11, 3, (3, 7, 1, 0, 0), (0, 0, 0, 1, 0, 1, 1, 0), ('line', 'g-perp', 'unitr'), None, ()),
    (86, 11, 3, (4, 6, 0, 1, 0), (0, 0, 0, 1, 0, 0, 2, 0), ('unitr', 'g-perp', 'unitr'), None, (3,)),
    (87, 11, 3, (4, 6, 0, 1, 0), (0, 0, 0, 1, 0, 0, 2, 0), ('unitr', 'g-perp', 'unitr'), None, (3,)),
    (88, 11, 3, (4, 5, 2, 0, 0), (0, 0, 0, 1, 0, 0, 2, 0), ('g-perp', 'unitr', 'unitr'), None, (4,)),
    (89, 11, 3, (4, 5, 2, 0, 0), (0, 0, 0, 1, 0, 0, 2, 0), ('g-perp', 'unitr', 'unitr'), None, (4,)),
    (90, 11, 2, (6, 4, 1, 0, 0), (0, 1, 0, 0, 0, 0, 1, 1), ('line', 'unitr', 'ovoid'), None, ()),
    (91, 11, 2, (6, 4, 1, 0, 0), (0, 0, 0, 2, 0, 0, 0, 1), ('unitr', 'g-perp', 'unitr'), None, ()),
    (92, 11, 2, (6, 4, 1, 0, 0), (0, 0, 0, 1, 1, 0, 1, 0), ('tritr', 'unitr', 'g-perp'), None, ()),
    (93, 11, 2, (6, 4, 1, 0, 0), (0, 0, 0, 1, 0, 1, 1, 0), ('tritr', 'g-perp', 'unitr'), None, ()),
    (94, 11, 2, (6, 4, 1, 0, 0), (0, 0, 0, 1, 0, 0, 2, 0), ('g-perp', 'unitr', 'unitr'), None, ()),
    (95, 11, 1, (8, 3, 0, 0, 0), (0, 0, 2, 0, 0, 0, 0, 1), ('ovoid', 'point', 'ovoid'), None, ()),
    (96, 11, 1, (8, 3, 0, 0, 0), (0, 0, 1, 0, 0, 0, 2, 0), ('unitr', 'unitr', 'ovoid'), None, ()),
    (97, 11, 0, (11, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 2), ('unitr', 'unitr', 'ovoid'), None, ()),
    (98, 11, 0, (11, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 1, 1), ('tritr', 'ovoid', 'unitr'), None, ()),
    (99, 9, 6, (0, 0, 9, 0, 0), (0, 0, 0, 0, 3, 0, 0, 0), ('line', 'line', 'line'), None, ()),
    (100, 9, 4, (0, 8, 0, 0, 1), (0, 1, 0, 0, 0, 0, 0, 2), ('perp', 'point', 'point'), None, ()),
    (101, 9, 3, (2, 6, 0, 1, 0), (0, 0, 1, 0, 0, 1, 0, 1), ('perp', 'point', 'point'), None, ()),
    (102, 9, 3, (2, 6, 0, 1, 0), (0, 0, 0, 1, 0, 0, 1, 1), ('point', 'g-perp', 'unitr'), None, ()),
    (103, 9, 3, (0, 9, 0, 0, 0), (0, 0, 0, 0, 3, 0, 0, 0), ('line', 'line', 'line'), None, ()),
    (104, 9, 3, (2, 5, 2, 0, 0), (0, 0, 0, 0, 2, 1, 0, 0), ('line', 'tritr', 'line'), None, ()),
    (105, 9, 3, (0, 9, 0, 0, 0), (0, 0, 0, 0, 1, 2, 0, 0), ('line', 'line', 'line'), None, ()),
    (106, 9, 3, (2, 5, 2, 0, 0), (0, 0, 0, 0, 1, 0, 2, 0), ('tritr', 'g-perp', 'point'), None, ()),
    (107, 9, 3, (1, 7, 1, 0, 0), (0, 0, 0, 0, 1, 0, 2, 0), ('point', 'g-perp', 'line'), None, ()),
    (108, 9, 3, (0, 9, 0, 0, 0), (0, 0, 0, 0, 0, 3, 0, 0), ('tritr', 'tritr', 'tritr'), None, ()),
    (109, 9, 3, (1, 7, 1, 0, 0), (0, 0, 0, 0, 0, 1, 2, 0), ('point', 'g-perp', 'line'), None, ()),
    (110, 9, 3, (0, 9, 0, 0, 0), (0, 0, 0, 0, 0, 0, 3, 0), ('unitr', 'unitr', 'unitr'), None, ()),
    (111, 9, 2, (4, 4, 1, 0, 0), (0, 0, 0, 1, 0, 1, 0, 1), ('line', 'unitr', 'unitr'), None, ()),
    (112, 9, 2, (4, 4, 1, 0, 0), (0, 0, 0, 1, 0, 0, 1, 1), ('g-perp', 'point', 'unitr'), None, ()),
    (113, 9, 2, (4, 4, 1, 0, 0), (0, 0, 0, 0, 1, 0, 2, 0), ('line', 'unitr', 'unitr'), None, (5,)),
    (114, 9, 2, (4, 4, 1, 0, 0), (0, 0, 0, 0, 1, 0, 2, 0), ('line', 'unitr', 'unitr'), None, (5,)),
    (115, 9, 2, (4, 4, 1, 0, 0), (0, 0, 0, 0, 1, 2, 0, 0), ('tritr', 'tritr', 'line'), None, ()),
    (116, 9, 2, (3, 6, 0, 0, 0), (0, 0, 0, 0, 0, 3, 0, 0), ('line', 'line', 'tritr'), None, ()),
    (117, 9, 2, (4, 4, 1, 0, 0), (0, 0, 0, 0, 0, 1, 2, 0), ('tritr', 'g-perp', 'point'), None, ()),
    (118, 9, 2, (3, 6, 0, 0, 0), (0, 0, 0, 0, 0, 1, 2, 0), ('tritr', 'unitr', 'unitr'), None, ()),
    (119, 9, 2, (4, 4, 1, 0, 0), (0, 0, 0, 0, 0, 0, 3, 0), ('point', 'g-perp', 'unitr'), None, (6,)),
    (120, 9, 2, (4, 4, 1, 0, 0), (0, 0, 0, 0, 0, 0, 3, 0), ('point', 'g-perp', 'unitr'), None, (6,)),
    (121, 9, 1, (6, 3, 0, 0, 0), (0, 0, 0, 1, 1, 0, 0, 1), ('unitr', 'line', 'unitr'), None, ()),
    (122, 9, 1, (6, 3, 0, 0, 0), (0, 0, 0, 0, 3, 0, 0, 0), ('tritr', 'tritr', 'line'), None, ()),
    (123, 9, 1, (6, 3, 0, 0, 0), (0, 0, 0, 0, 1, 2, 0, 0), ('line', 'tritr', 'tritr'), None, ()),
    (124, 9, 1, (6, 3, 0, 0, 0), (0, 0, 0, 0, 1, 0, 2, 0), ('line', 'unitr', 'unitr'), None, ()),
    (125, 9, 1, (6, 3, 0, 0, 0), (0, 0, 0, 0, 0, 3, 0, 0), ('tritr', 'tritr', 'tritr'), None, ()),
    (126, 9, 1, (6, 3, 0, 0, 0), (0, 0, 0, 0, 0, 1, 2, 0), ('line', 'unitr', 'unitr'), None, ()),
    (127, 9, 1, (6, 3, 0, 0, 0), (0, 0, 0, 0, 0, 1, 2, 0), ('tritr', 'unitr', 'unitr'), None, ()),
    (128, 9, 1, (6, 3, 0, 0, 0), (0, 0, 0, 0, 0, 0, 3, 0), ('unitr', 'unitr', 'unitr'), None, ()),
    (129, 9, 0, (9, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 2), ('tritr', 'point', 'ovoid'), None, ()),
    (130, 9, 0, (9, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0, 1, 1), ('ovoid', 'unitr', 'point'), None, ()),
    (131, 9, 0, (9, 0, 0, 0, 0), (0, 0, 0, 1, 1, 0, 0, 1), ('tritr', 'unitr', 'unitr'), None, ()),
    (132, 9, 0, (9, 0, 0, 0, 0), (0, 0, 0, 1, 0, 1, 0, 1), ('tritr', 'unitr', 'unitr'), None, ()),
    (133, 9, 0, (9, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 1, 1), ('unitr', 'unitr', 'unitr'), None, (7,)),
    (134, 9, 0, (9, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 1, 1), ('unitr', 'unitr', 'unitr'), None, (7,)),
    (135, 9, 0, (9, 0, 0, 0, 0), (0, 0, 0, 0, 2, 1, 0, 0), ('tritr', 'tritr', 'tritr'), None, ()),
    (136, 9, 0, (9, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 2, 0), ('tritr', 'unitr', 'unitr'), None, ()),
    (137, 9, 0, (9, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1, 2, 0), ('tritr', 'unitr', 'unitr'), None, ()),
    (138, 9, 0, (9, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 3, 0), ('unitr', 'unitr', 'unitr'), None, ()),
    (139, 7, 2, (2, 4, 1, 0, 0), (0, 0, 0, 0, 1, 0, 1, 1), ('point', 'unitr', 'line'), None, ()),
    (140, 7, 2, (2, 4, 1, 0, 0), (0, 0, 0, 0, 0, 0, 2, 1), ('point', 'g-perp', 'point'), None, ()),
    (141, 7, 1, (4, 3, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0, 2), ('ovoid', 'point', 'point'), None, ()),
    (142, 7, 1, (4, 3, 0, 0, 0), (0, 0, 0, 0, 0, 1, 1, 1), ('line', 'unitr', 'point'), None, ()),
    (143, 7, 1, (4, 3, 0, 0, 0), (0, 0, 0, 0, 0, 0, 2, 1), ('unitr', 'unitr', 'point'), None, (8,)),
    (144, 7, 1, (4, 3, 0, 0, 0), (0, 0, 0, 0, 0, 0, 2, 1), ('point', 'unitr', 'unitr'), None, (8,)),
    (145, 7, 0, (7, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 0, 2), ('unitr', 'unitr', 'point'), None, ()),
    (146, 7, 0, (7, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 1, 1), ('tritr', 'point', 'unitr'), None, ()),
    (147, 7, 0, (7, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1, 1, 1), ('tritr', 'point', 'unitr'), None, (9,)),
    (148, 7, 0, (7, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1, 1, 1), ('tritr', 'point', 'unitr'), None, (9,)),
    (149, 7, 0, (7, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 2, 1), ('point', 'unitr', 'unitr'), DAGGER, (10,)),
    (150, 7, 0, (7, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 2, 1), ('point', 'unitr', 'unitr'), None, (10, 11)),
    (151, 7, 0, (7, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 2, 1), ('point', 'unitr', 'unitr'), None, (10, 11)),
    (152, 5, 1, (2, 3, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0, 2), ('line', 'point', 'point'), None, ()),
    (153, 5, 0, (5, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0, 2), ('tritr', 'point', 'point'), None, ()),
    (154, 5, 0, (5, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 1, 2), ('unitr', 'point', 'point'), None, ()),
    (155, 3, 1, (0, 3, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 3), ('point', 'point', 'point'), None, ()),
    (156, 3, 0, (3, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 3), ('point', 'point', 'point'), None, ()),
)


@dataclass(frozen=True)
class Table3Row:
    tp: int
    pt: int
    ln: int
    orders: tuple
    composition: tuple
    labels: tuple
    split: str
    notes: tuple

    @property
    def key(self):
        return (self.pt, self.ln, self.orders, self.composition,
                tuple(sorted(self.labels)))

    @property
    def multiplicity(self):
        "number of orbits the printed row claims"
        return 2 if self.split else 1


# Printed order distributions that contradict the printed line count:
# sum_k k * n_k must equal 3 * Ln for any point set.
ERRATA = {
    2: {"orders": (0, 0, 8, 12, 5)},
    46: {"orders": (0, 10, 1, 2, 0)},
}


def table3_rows(corrected=False):
    rows = [Table3Row(*r) for r in TABLE3]
    if corrected:
        rows = [Table3Row(**{**r.__dict__, **ERRATA.get(r.tp, {})})
                for r in rows]
    return rows
