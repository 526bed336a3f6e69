"""Published reference values for the t9 experiment grid (bounds and simulated W1).

Keys are ``(k, alpha)``; each tuple runs over :data:`N_GRID`.  The companion
normal and t14 grids were not available in machine-readable form and are not
included.
"""

N_GRID = (25, 50, 75, 100, 150, 200, 250, 500, 1000, 2000)
ALPHA_GRID = (0.0, 0.1, 0.3, 0.5, 0.7)
K_GRID = (0, 1, 2)

BOUND_T9 = {
    (0, 0.0): (0.912, 0.645, 0.527, 0.456, 0.372, 0.322, 0.288, 0.204, 0.144, 0.102),
    (0, 0.1): (11.003, 9.294, 8.822, 8.707, 7.509, 6.658, 6.091, 4.779, 3.770, 2.773),
    (0, 0.3): (16.088, 12.932, 11.481, 10.287, 8.937, 8.192, 7.484, 5.751, 4.386, 3.375),
    (0, 0.5): (16.952, 13.518, 11.760, 10.689, 9.245, 8.365, 7.706, 5.955, 4.579, 3.514),
    (0, 0.7): (16.871, 14.042, 12.434, 11.367, 9.945, 9.018, 8.343, 6.531, 5.087, 3.961),
    (1, 0.0): (2.564, 1.818, 1.485, 1.286, 1.050, 0.909, 0.813, 0.574, 0.406, 0.287),
    (1, 0.1): (7.711, 5.701, 4.808, 4.285, 3.686, 3.350, 3.118, 2.283, 1.708, 1.326),
    (1, 0.3): (9.811, 7.567, 6.601, 5.939, 5.063, 4.554, 4.217, 3.213, 2.491, 1.908),
    (1, 0.5): (12.512, 9.980, 8.716, 7.861, 6.825, 6.133, 5.671, 4.394, 3.402, 2.641),
    (1, 0.7): (14.968, 12.828, 11.376, 10.387, 9.092, 8.247, 7.644, 5.983, 4.668, 3.647),
    (2, 0.0): (4.088, 2.916, 2.385, 2.067, 1.688, 1.462, 1.308, 0.924, 0.653, 0.462),
    (2, 0.1): (10.398, 7.659, 6.409, 5.667, 4.804, 4.309, 3.925, 2.833, 2.074, 1.561),
    (2, 0.3): (10.801, 8.273, 7.175, 6.405, 5.424, 4.850, 4.467, 3.353, 2.557, 1.913),
    (2, 0.5): (12.211, 9.739, 8.459, 7.632, 6.592, 5.921, 5.471, 4.210, 3.233, 2.486),
    (2, 0.7): (14.392, 12.610, 11.215, 10.236, 8.954, 8.111, 7.509, 5.866, 4.565, 3.556),
}

W1_T9 = {
    (0, 0.0): (0.288, 0.218, 0.184, 0.163, 0.136, 0.120, 0.109, 0.080, 0.058, 0.041),
    (0, 0.1): (0.294, 0.222, 0.188, 0.166, 0.139, 0.123, 0.111, 0.081, 0.059, 0.042),
    (0, 0.3): (0.354, 0.266, 0.224, 0.198, 0.165, 0.145, 0.131, 0.095, 0.069, 0.049),
    (0, 0.5): (0.536, 0.401, 0.336, 0.296, 0.246, 0.216, 0.194, 0.140, 0.101, 0.072),
    (0, 0.7): (1.185, 0.891, 0.746, 0.655, 0.544, 0.475, 0.428, 0.307, 0.219, 0.156),
    (1, 0.0): (0.072, 0.040, 0.028, 0.021, 0.015, 0.011, 0.009, 0.005, 0.002, 0.001),
    (1, 0.1): (0.103, 0.069, 0.055, 0.047, 0.038, 0.032, 0.029, 0.020, 0.014, 0.010),
    (1, 0.3): (0.256, 0.187, 0.155, 0.135, 0.111, 0.097, 0.087, 0.062, 0.044, 0.031),
    (1, 0.5): (0.524, 0.384, 0.319, 0.279, 0.230, 0.200, 0.180, 0.128, 0.091, 0.065),
    (1, 0.7): (1.282, 0.951, 0.791, 0.693, 0.572, 0.499, 0.448, 0.320, 0.227, 0.161),
    (2, 0.0): (0.083, 0.045, 0.031, 0.024, 0.016, 0.013, 0.010, 0.005, 0.003, 0.001),
    (2, 0.1): (0.088, 0.049, 0.034, 0.026, 0.018, 0.014, 0.012, 0.006, 0.004, 0.002),
    (2, 0.3): (0.167, 0.113, 0.091, 0.078, 0.063, 0.055, 0.049, 0.034, 0.024, 0.017),
    (2, 0.5): (0.449, 0.329, 0.272, 0.237, 0.195, 0.170, 0.152, 0.109, 0.077, 0.055),
    (2, 0.7): (1.307, 0.966, 0.802, 0.701, 0.578, 0.504, 0.452, 0.322, 0.229, 0.162),
}


def lookup(table, k, alpha, n):
    return table[(k, float(alpha))][N_GRID.index(n)]
