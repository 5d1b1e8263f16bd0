"""Hand-checked membership tables.

The two genus-2 presets have the same face edge sets, so Lambda, Gamma and
triangularity agree on them; only the gluing (and hence Q and component
counts) differs.
"""

# (m, in Lambda)
LAMBDA_GENUS2 = [
    ((0, 0, 0), True),
    ((1, 1, 0), True),
    ((1, 0, 1), True),
    ((0, 1, 1), True),
    ((2, 1, 1), True),
    ((1, 1, 1), False),   # odd sum
    ((4, 1, 1), False),   # 4 > 1 + 1
    ((2, 2, 2), True),
    ((2, 0, 0), False),   # 2 > 0 + 0
    ((3, 2, 1), True),    # 3 <= 2 + 1, sum 6
    ((3, 1, 1), False),   # odd sum
    ((4, 2, 2), True),
    ((5, 2, 1), False),   # 5 > 3
    ((0, 0, 2), False),
    ((2, 2, 0), True),
    ((1, 2, 3), True),
    ((6, 3, 3), True),
    ((1, 2, 4), False),   # odd sum
    ((7, 4, 3), True),
    ((8, 1, 1), False),
    ((2, 3, 3), True),
    ((0, 1, 2), False),   # odd sum
]

# ((n, t), in Gamma)
GAMMA_GENUS2 = [
    (((2, 1, 1), (5, -3, 0)), True),
    (((1, 1, 1), (0, 0, 0)), False),     # odd parity
    (((0, 1, 1), (-1, 0, 0)), False),    # n = 0 with negative twist
    (((0, 1, 1), (2, 0, 0)), True),
    (((4, 1, 1), (0, 0, 0)), True),      # no triangle inequality in Gamma
    (((2, 2, 2), (-5, -5, -5)), True),
    (((0, 0, 0), (0, 0, 0)), True),
    (((0, 0, 0), (1, 2, 3)), True),
    (((0, 0, 0), (0, -1, 0)), False),
    (((3, 2, 1), (1, 1, 1)), True),
    (((1, 0, 0), (0, 0, 0)), False),     # odd parity
    (((2, 0, 0), (0, 0, 0)), True),
    (((2, 0, 0), (0, 1, 0)), True),
    (((2, 0, 0), (0, -1, 0)), False),
    (((-2, 2, 0), (0, 0, 0)), False),    # negative n
    (((1, 1, 0), (3, -3, 7)), True),
    (((1, 1, 0), (3, -3, -7)), False),
    (((6, 4, 2), (1, 0, 0)), True),
    (((5, 4, 2), (0, 0, 0)), False),     # odd parity
    (((8, 8, 8), (-8, 8, -8)), True),
]

# ((n, t), triangular) on Gamma members
TRIANGULAR_GENUS2 = [
    (((2, 1, 1), (5, -3, 0)), True),
    (((0, 1, 1), (2, 0, 0)), False),     # twist on an n = 0 edge
    (((4, 1, 1), (0, 0, 0)), False),     # 4 > 1 + 1
    (((2, 2, 2), (-5, -5, -5)), True),
    (((0, 0, 0), (0, 0, 0)), True),
    (((0, 0, 0), (1, 2, 3)), False),
    (((3, 2, 1), (1, 1, 1)), True),
    (((2, 0, 0), (0, 0, 0)), False),     # 2 > 0 + 0
    (((1, 1, 0), (3, -3, 0)), True),
    (((1, 1, 0), (3, -3, 7)), False),
    (((6, 4, 2), (1, 0, 0)), True),
    (((8, 8, 8), (-8, 8, -8)), True),
    (((2, 2, 0), (1, 1, 0)), True),
    (((1, 0, 1), (0, 5, 0)), False),
    (((1, 0, 1), (2, 0, -2)), True),
    (((6, 3, 3), (0, 0, 0)), True),
    (((6, 3, 1), (0, 0, 0)), False),     # 6 > 3 + 1
    (((0, 2, 2), (0, 1, 1)), True),
    (((0, 2, 2), (1, 1, 1)), False),
    (((4, 4, 0), (0, 0, 0)), True),
]

LAMBDA_TORUS = [((m,), True) for m in range(20)] + [((-1,), False), ((-7,), False)]

GAMMA_TORUS = [
    (((0,), (-1,)), False),
    (((3,), (-5,)), True),
    (((0,), (0,)), True),
    (((0,), (3,)), True),
    (((1,), (-1,)), True),
    (((0,), (-5,)), False),
    (((2,), (0,)), True),
    (((5,), (5,)), True),
    (((-1,), (0,)), False),
    (((4,), (-100,)), True),
    (((0,), (100,)), True),
    (((1,), (0,)), True),
    (((7,), (3,)), True),
    (((0,), (-2,)), False),
    (((-3,), (-3,)), False),
    (((8,), (-8,)), True),
    (((1,), (1,)), True),
    (((2,), (-7,)), True),
    (((0,), (1,)), True),
    (((0,), (-100,)), False),
]

TRIANGULAR_TORUS = [
    (((0,), (3,)), False),
    (((2,), (-7,)), True),
    (((0,), (0,)), True),
    (((1,), (1,)), True),
    (((3,), (-5,)), True),
    (((0,), (1,)), False),
    (((4,), (0,)), True),
    (((1,), (-1,)), True),
    (((5,), (5,)), True),
    (((0,), (100,)), False),
    (((8,), (-8,)), True),
    (((6,), (2,)), True),
    (((0,), (2,)), False),
    (((2,), (0,)), True),
    (((7,), (3,)), True),
    (((1,), (0,)), True),
    (((9,), (-9,)), True),
    (((0,), (7,)), False),
    (((3,), (3,)), True),
    (((2,), (1,)), True),
]

TABLES = {
    "torus": (LAMBDA_TORUS, GAMMA_TORUS, TRIANGULAR_TORUS),
    "genus2": (LAMBDA_GENUS2, GAMMA_GENUS2, TRIANGULAR_GENUS2),
    "genus2-pants": (LAMBDA_GENUS2, GAMMA_GENUS2, TRIANGULAR_GENUS2),
}
