//! Stand-alone oracle for the dimension of the non-abelian tensor square of
//! a small Lie algebra with integer structure constants. Shares no code with
//! the library: relations are written out over the integers and the rank is
//! taken by fraction-free elimination in i128.

#![allow(dead_code, clippy::needless_range_loop)]

/// `c[i][j][k]` = coefficient of `e_k` in `[e_i, e_j]`.
pub type Consts = Vec<Vec<Vec<i64>>>;

pub fn sl2() -> Consts {
    // e, f, h: [h,e]=2e, [h,f]=-2f, [e,f]=h
    let mut c = vec![vec![vec![0; 3]; 3]; 3];
    c[2][0][0] = 2;
    c[0][2][0] = -2;
    c[2][1][1] = -2;
    c[1][2][1] = 2;
    c[0][1][2] = 1;
    c[1][0][2] = -1;
    c
}

pub fn heis3() -> Consts {
    // x, y, z: [x,y]=z
    let mut c = vec![vec![vec![0; 3]; 3]; 3];
    c[0][1][2] = 1;
    c[1][0][2] = -1;
    c
}

pub fn abelian(n: usize) -> Consts {
    vec![vec![vec![0; n]; n]; n]
}

pub fn gl2() -> Consts {
    // e11, e12, e21, e22 with the commutator of matrix units
    let unit = |a: usize| (a / 2, a % 2);
    let mut c = vec![vec![vec![0; 4]; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            let ((i, j), (k, l)) = (unit(a), unit(b));
            if j == k {
                c[a][b][i * 2 + l] += 1;
            }
            if l == i {
                c[a][b][k * 2 + j] -= 1;
            }
        }
    }
    c
}

/// Rank of an integer matrix by Bareiss elimination.
pub fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = 1i128;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            for j in col + 1..width {
                rows[i][j] = (rows[r][col] * rows[i][j] - rows[i][col] * rows[r][j]) / prev;
            }
            rows[i][col] = 0;
        }
        prev = rows[r][col];
        r += 1;
    }
    r
}

/// `dim(M ⊗ M) = d² - rank(relations)`.
pub fn tensor_square_dim(c: &Consts) -> usize {
    let d = c.len();
    let idx = |a: usize, b: usize| a * d + b;
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                // [mi,mj]⊗mk - mi⊗[mj,mk] + mj⊗[mi,mk]
                let mut r1 = vec![0i128; d * d];
                // mi⊗[mj,mk] - [mk,mi]⊗mj + [mj,mi]⊗mk
                let mut r2 = vec![0i128; d * d];
                for s in 0..d {
                    r1[idx(s, k)] += c[i][j][s] as i128;
                    r1[idx(i, s)] -= c[j][k][s] as i128;
                    r1[idx(j, s)] += c[i][k][s] as i128;
                    r2[idx(i, s)] += c[j][k][s] as i128;
                    r2[idx(s, j)] -= c[k][i][s] as i128;
                    r2[idx(s, k)] += c[j][i][s] as i128;
                }
                rows.push(r1);
                rows.push(r2);
            }
        }
    }
    d * d - rank(rows)
}
