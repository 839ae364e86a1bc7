//! Published values used as golden data by tests and `selfcheck`.

/// `B = [Q_V(u_i, u_j)]` of order 8.
pub const MATRIX_B: [[i64; 8]; 8] = [
    [0, 6, 18, 46, 114, 278, 674, 1630],
    [-6, 0, 18, 70, 202, 526, 1314, 3222],
    [-18, -18, 0, 94, 378, 1134, 3042, 7742],
    [-46, -70, -94, 0, 466, 1966, 6114, 16830],
    [-114, -202, -378, -466, 0, 2438, 10530, 33502],
    [-278, -526, -1134, -1966, -2438, 0, 12962, 56982],
    [-674, -1314, -3042, -6114, -10530, -12962, 0, 69950],
    [-1630, -3222, -7742, -16830, -33502, -56982, -69950, 0],
];

/// Diagonally symmetric tilings of `AD(n)`, `n = 1..=7`.
pub const DIAGONAL_COUNTS: [u64; 7] = [2, 6, 24, 132, 1048, 11960, 190912];

/// `o_0, ..., o_8` (the last two from their factorizations
/// `29 * 193 * 1549` and `3 * 29 * 263 * 67049`).
pub const O_INT: [u64; 9] = [1, 1, 3, 13, 149, 2661, 119335, 8669753, 1534148169];

/// `o_0(k,t), ..., o_8(k,t)`.
pub const O_POLY: [&str; 9] = [
    "1",
    "1",
    "-k + 4t",
    "-3k + 16t",
    "13k^2 - 120kt + 256t^2",
    "149k^2 - 1584kt + 4096t^2",
    "-2661k^3 + 38540k^2t - 178688kt^2 + 262144t^3",
    "-119335k^3 + 1899616k^2t - 9887744kt^2 + 16777216t^3",
    "8669753k^4 - 171171824k^3t + 1234228224k^2t^2 - 3832545280kt^3 + 4294967296t^4",
];

/// `t_1, ..., t_8` of the decomposition of `A(k,t)`, as (numerator, denominator).
pub const T_LIST: [(&str, &str); 8] = [
    ("t", "1"),
    ("-k + 4t", "1"),
    ("-3k + 16t", "1"),
    ("13k^2 - 120kt + 256t^2", "-k + 4t"),
    ("149k^2 - 1584kt + 4096t^2", "-3k + 16t"),
    (
        "-2661k^3 + 38540k^2t - 178688kt^2 + 262144t^3",
        "13k^2 - 120kt + 256t^2",
    ),
    (
        "-119335k^3 + 1899616k^2t - 9887744kt^2 + 16777216t^3",
        "149k^2 - 1584kt + 4096t^2",
    ),
    (
        "8669753k^4 - 171171824k^3t + 1234228224k^2t^2 - 3832545280kt^3 + 4294967296t^4",
        "-2661k^3 + 38540k^2t - 178688kt^2 + 262144t^3",
    ),
];
