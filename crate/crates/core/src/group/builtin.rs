//! Small named groups used by the corpus, tests and the file format.

use super::Group;

fn from_rule(n: usize, f: impl Fn(usize, usize) -> usize) -> Group {
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(f(a, b) as u32);
        }
    }
    Group::from_flat_unchecked(n, mul)
}

/// `C_n` with `k` standing for the `k`-th power of a generator.
pub fn cyclic(n: usize) -> Group {
    assert!(n > 0, "cyclic group of order 0");
    from_rule(n, |a, b| (a + b) % n).with_name(format!("C{n}"))
}

/// Dihedral group of order `2n`; index `i + n*j` stands for `r^i s^j`.
pub fn dihedral(n: usize) -> Group {
    assert!(n > 0, "dihedral group of order 0");
    // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
    from_rule(2 * n, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let k = if j == 0 { k } else { (n - k) % n };
        (i + k) % n + n * ((j + l) % 2)
    })
    .with_name(format!("D{}", 2 * n))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// `S_n` on lexicographically ordered permutations, `(στ)(i) = σ(τ(i))`.
pub fn symmetric(n: usize) -> Group {
    let perms = permutations(n);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    from_rule(perms.len(), |a, b| {
        let c: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
        index(&c)
    })
    .with_name(format!("S{n}"))
}

/// Sign of each permutation of `S_n`, as indices into `C_2`.
pub fn sign_map(n: usize) -> Vec<usize> {
    permutations(n)
        .iter()
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            inversions % 2
        })
        .collect()
}

/// Quaternion group; index `2a + b` stands for `i^a j^b` with `0 <= a < 4`,
/// `b` in `{0, 1}`, `j^2 = i^2` and `j i j^-1 = i^-1`.
pub fn quaternion8() -> Group {
    from_rule(8, |x, y| {
        let (a, b) = (x / 2, x % 2);
        let (c, d) = (y / 2, y % 2);
        // i^a j^b i^c j^d = i^(a + (-1)^b c) j^(b+d), with j^2 = i^2
        let c = if b == 0 { c } else { (4 - c) % 4 };
        let mut e = (a + c) % 4;
        let f = b + d;
        if f == 2 {
            e = (e + 2) % 4;
        }
        2 * e + f % 2
    })
    .with_name("Q8")
}

/// `C_2 × C_2`; index `a + 2b`.
pub fn klein4() -> Group {
    from_rule(4, |x, y| x ^ y).with_name("C2×C2")
}

/// `A × B` with `(a, b)` at index `a + |A| b`.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let na = a.order();
    from_rule(na * b.order(), |x, y| {
        a.mul(x % na, y % na) + na * b.mul(x / na, y / na)
    })
}
