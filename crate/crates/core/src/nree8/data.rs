//! Transcribed vectors (MOG arrays, scale-8 coordinates) and Gram matrices
//! for the two worked `DIH6` examples.

pub const BETA: [[[i64; 6]; 4]; 8] = [
    [[4, -4, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 4, 0, 0, 0, 0], [-4, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 0, 0, 0, 0, 0], [4, -4, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 0, 0, 0, 0, 0], [0, 4, 0, 0, 0, 0], [-4, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [4, -4, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 4, 0, 0, 0, 0], [-4, 0, 0, 0, 0, 0]],
    [[-4, -4, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[2, 2, 0, 0, 0, 0], [2, 2, 0, 0, 0, 0], [2, 2, 0, 0, 0, 0], [2, 2, 0, 0, 0, 0]],
];

pub const ALPHA: [[[i64; 6]; 4]; 8] = [
    [[2, -2, 2, -2, 2, 0], [0, 0, 0, 0, 0, 2], [0, 0, 0, 0, 0, 2], [0, 0, 0, 0, 0, 2]],
    [[0, 2, 0, 2, 0, 2], [-2, 0, -2, 0, 0, -2], [0, 0, 0, 0, 2, -2], [0, 0, 0, 0, 0, 0]],
    [[0, 0, 0, 0, 0, -2], [2, -2, 2, -2, 2, 0], [0, 0, 0, 0, -2, 0], [0, 0, 0, 0, 2, 0]],
    [[0, 0, 0, 0, 0, 2], [0, 2, 0, 2, -2, 2], [-2, 0, -2, 0, 0, 0], [0, 0, 0, 0, 0, -2]],
    [[0, 0, 0, 0, 0, -2], [0, 0, 0, 0, 2, 0], [2, -2, 2, -2, 2, 0], [0, 0, 0, 0, -2, 0]],
    [[0, 0, 0, 0, 0, 2], [0, 0, 0, 0, 0, -2], [0, 2, 0, 2, -2, 2], [-2, 0, -2, 0, 0, 0]],
    [[-2, -2, -2, -2, 0, -2], [0, 0, 0, 0, -2, 0], [0, 0, 0, 0, -2, 0], [0, 0, 0, 0, -2, 0]],
    [[1, 1, 1, 1, -3, 1], [1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1]],
];

pub const GAMMA: [[[i64; 6]; 4]; 8] = [
    [[0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [-4, 0, 0, 0, 0, 0], [4, 0, 0, 0, 0, 0]],
    [[0, 0, 0, 0, 0, 0], [-4, 0, 0, 0, 0, 0], [4, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, -4, 0, 0, 0, 0], [4, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 4, -4, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 0, 4, -4, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 0, 0, 4, -4, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]],
    [[0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [-4, 0, 0, 0, 0, 0], [-4, 0, 0, 0, 0, 0]],
    [[0, 2, 2, 2, 2, 2], [2, 0, 0, 0, 0, 0], [2, 0, 0, 0, 0, 0], [2, 0, 0, 0, 0, 0]],
];

#[rustfmt::skip]
pub const DIH6_16_GRAM: [[i64; 16]; 16] = [
    [ 4, -2,  0,  0,  0,  0,  0,  0,  2, -1,  0,  0,  0,  0,  0,  0],
    [-2,  4, -2,  0,  0,  0, -2,  0, -1,  2, -1,  0,  0,  0, -1,  0],
    [ 0, -2,  4, -2,  0,  0,  0,  0,  0, -1,  2, -1,  0,  0,  0,  0],
    [ 0,  0, -2,  4, -2,  0,  0,  0,  0,  0, -1,  2, -1,  0,  0,  0],
    [ 0,  0,  0, -2,  4, -2,  0,  0,  0,  0,  0, -1,  2, -1,  0,  0],
    [ 0,  0,  0,  0, -2,  4,  0,  0,  0,  0,  0,  0, -1,  2,  0,  0],
    [ 0, -2,  0,  0,  0,  0,  4, -2,  0, -1,  0,  0,  0,  0,  2, -1],
    [ 0,  0,  0,  0,  0,  0, -2,  4,  0,  0,  0,  0,  0,  0, -1,  2],
    [ 2, -1,  0,  0,  0,  0,  0,  0,  4, -2,  0,  0,  0,  0,  0,  0],
    [-1,  2, -1,  0,  0,  0, -1,  0, -2,  4, -2,  0,  0,  0, -2,  0],
    [ 0, -1,  2, -1,  0,  0,  0,  0,  0, -2,  4, -2,  0,  0,  0,  0],
    [ 0,  0, -1,  2, -1,  0,  0,  0,  0,  0, -2,  4, -2,  0,  0,  0],
    [ 0,  0,  0, -1,  2, -1,  0,  0,  0,  0,  0, -2,  4, -2,  0,  0],
    [ 0,  0,  0,  0, -1,  2,  0,  0,  0,  0,  0,  0, -2,  4,  0,  0],
    [ 0, -1,  0,  0,  0,  0,  2, -1,  0, -2,  0,  0,  0,  0,  4, -2],
    [ 0,  0,  0,  0,  0,  0, -1,  2,  0,  0,  0,  0,  0,  0, -2,  4],
];

#[rustfmt::skip]
pub const DIH6_14_GRAM: [[i64; 14]; 14] = [
    [ 4, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [-2,  4, -2,  0,  0,  0, -2,  0, -2,  0,  0,  0,  2,  0],
    [ 0, -2,  4, -2,  0,  0,  0,  0,  0,  1,  0,  0, -2,  0],
    [ 0,  0, -2,  4, -2,  0,  0,  0,  1, -2,  1,  0,  0,  0],
    [ 0,  0,  0, -2,  4, -2,  0,  0,  0,  1, -2,  1,  0,  0],
    [ 0,  0,  0,  0, -2,  4,  0,  0,  0,  0,  1, -2,  0,  0],
    [ 0, -2,  0,  0,  0,  0,  4, -2,  2,  0,  0,  0,  0,  1],
    [ 0,  0,  0,  0,  0,  0, -2,  4,  0,  0,  0,  0, -1, -2],
    [ 0, -2,  0,  1,  0,  0,  2,  0,  4, -2,  0,  0,  0,  0],
    [ 0,  0,  1, -2,  1,  0,  0,  0, -2,  4, -2,  0,  0,  0],
    [ 0,  0,  0,  1, -2,  1,  0,  0,  0, -2,  4, -2,  0,  0],
    [ 0,  0,  0,  0,  1, -2,  0,  0,  0,  0, -2,  4,  0,  0],
    [ 0,  2, -2,  0,  0,  0,  0, -1,  0,  0,  0,  0,  4,  2],
    [ 0,  0,  0,  0,  0,  0,  1, -2,  0,  0,  0,  0,  2,  4],
];
