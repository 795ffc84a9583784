//! Reference values for the acceptance suite.

/// Nim-values of (0, a, b) for 0 <= a <= b <= 16; row `a` lists b = a ..= 16.
pub const SMALL_TRIANGLE: [&[u32]; 17] = [
    &[0, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1, 0, 0],
    &[0, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 7, 2, 9, 10, 11],
    &[1, 2, 2, 1, 2, 2, 5, 1, 6, 2, 8, 1, 9, 10, 10],
    &[0, 3, 1, 4, 3, 5, 4, 3, 7, 8, 8, 7, 8, 11],
    &[0, 3, 2, 3, 3, 6, 4, 7, 6, 9, 4, 5, 9],
    &[0, 4, 2, 5, 6, 6, 5, 8, 9, 9, 5, 11],
    &[1, 4, 5, 4, 4, 5, 5, 4, 7, 5, 11],
    &[0, 5, 1, 3, 7, 8, 4, 10, 10, 6],
    &[3, 6, 6, 7, 6, 9, 7, 10, 7],
    &[0, 6, 2, 8, 9, 9, 5, 6],
    &[1, 7, 8, 8, 4, 5, 11],
    &[0, 7, 1, 7, 5, 11],
    &[0, 2, 9, 8, 9],
    &[0, 9, 10, 11],
    &[1, 10, 10],
    &[0, 11],
    &[0],
];

/// G(0, 0, n) for n = 0 ..= 489.
pub const ROW_ZERO: [u32; 490] = [
    0, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 12, 0, 1, 0, 0, 0, 1,
    0, 2, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 4, 0, 1, 0, 0, 0, 1,
    0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1,
    0, 3, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1,
    0, 2, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 4, 0, 1, 0, 0, 0, 1,
    0, 3, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1,
    0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1,
    0, 5, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1,
    0, 0, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1,
    0, 2, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1,
    0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1,
    0, 3, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1,
    0, 3, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1,
    0, 2, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1,
    0, 0, 0, 1, 0, 0, 0, 1, 0, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1,
    0, 2, 0, 1, 0, 0, 0, 1, 0, 3, 0,
];

/// f(n) for n = 0 ..= 489.
pub const F_PREFIX: [u8; 490] = [
    0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
    1, 0, 1, 0, 0, 0, 1, 0, 1, 0,
];

/// Values b <= 300 with G(0, a, b) = 2, a <= b / 2, by row a.
pub const G2_ROWS: [(u64, &[u64]); 4] = [
    (0, &[32, 72, 104, 120, 128, 136, 200, 216, 232, 248, 288]),
    (
        1,
        &[
            3, 13, 17, 18, 23, 29, 33, 38, 39, 40, 46, 48, 53, 55, 57, 61, 62, 68, 70, 80, 85, 86,
            87, 91, 95, 96, 100, 101, 102, 109, 110, 116, 117, 118, 124, 126, 128, 132, 136, 144,
            145, 150, 151, 159, 165, 166, 167, 174, 176, 181, 182, 187, 189, 195, 196, 197, 204,
            206, 208, 212, 213, 214, 222, 223, 224, 228, 229, 238, 240, 244, 256, 263, 278, 279,
            284, 285, 294, 295, 296,
        ],
    ),
    (
        2,
        &[
            4, 6, 7, 11, 26, 27, 46, 71, 78, 80, 110, 136, 151, 159, 160, 174, 182, 190, 232, 247,
            248, 256, 263, 264, 271, 272, 279, 288,
        ],
    ),
    (3, &[23, 67, 147, 243, 259, 275]),
];

/// Values b <= 300 with G(0, a, b) = 3, a <= b / 2, by row a.
pub const G3_ROWS: [(u64, &[u64]); 4] = [
    (0, &[8, 40, 88, 96, 160, 168, 184, 264, 280, 296]),
    (
        1,
        &[
            4, 5, 21, 25, 27, 31, 37, 45, 47, 54, 69, 76, 77, 78, 83, 84, 89, 111, 115, 125, 130,
            131, 141, 146, 147, 156, 160, 161, 173, 192, 193, 198, 199, 207, 216, 221, 227, 237,
            242, 253, 257, 259, 267, 269, 274, 289, 299,
        ],
    ),
    (
        2,
        &[
            18, 19, 22, 31, 35, 48, 55, 62, 63, 70, 95, 102, 103, 104, 118, 119, 123, 134, 138,
            139, 147, 150, 154, 167, 168, 170, 183, 184, 187, 199, 207, 214, 216, 224, 231, 235,
            246, 250, 251, 260, 267, 275, 282, 283, 287, 292,
        ],
    ),
    (
        3,
        &[
            7, 10, 36, 53, 60, 68, 89, 92, 107, 108, 124, 179, 184, 204, 221, 229, 236, 247, 279,
            292,
        ],
    ),
];

/// Largest row index a holding a g-position with b <= 200, for g = 4 ..= 10.
pub const MAX_ROW_BY_G: [(u32, u64); 7] =
    [(4, 6), (5, 6), (6, 7), (7, 9), (8, 12), (9, 11), (10, 13)];
