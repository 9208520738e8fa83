//! The library against slow, independent reimplementations.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clifford_spinor::algebra::{blade30, Blade, CenterScalar, Multivector, Signature, MAX_DIM};
use clifford_spinor::cl03::{rep_h_plus_h, Quaternion};
use clifford_spinor::dirac::{lounesto_decompose, planewave, Branch, PlaneWaveParams, Spin};
use clifford_spinor::paravector::tetrad_decompose;
use clifford_spinor::repr::rep_cl30;
use clifford_spinor::SpacetimePoint;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_mv(rng: &mut impl Rng, sig: Signature) -> Multivector {
    let c: Vec<f64> = (0..sig.size()).map(|_| rng.random_range(-1.0..1.0)).collect();
    Multivector::from_coeffs(sig, &c)
}

fn signatures() -> Vec<Signature> {
    (1..=MAX_DIM as u8).flat_map(|n| (0..=n).map(move |p| Signature::new(p, n - p).unwrap())).collect()
}

/// Generator indices of a blade, ascending.
fn word(b: Blade) -> Vec<usize> {
    (0..8).filter(|i| b.mask() & (1 << i) != 0).collect()
}

/// Reduces a word of generators to canonical order by adjacent swaps,
/// contracting equal neighbours with their square.
fn normalize(mut w: Vec<usize>, sig: Signature) -> (f64, Vec<usize>) {
    let mut sign = 1.0;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < w.len() {
            if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else if w[i] == w[i + 1] {
                sign *= sig.square(w[i]);
                w.drain(i..i + 2);
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            return (sign, w);
        }
    }
}

fn oracle_product(a: &Multivector, b: &Multivector) -> Multivector {
    let sig = a.signature();
    let mut out = Multivector::zero(sig);
    for (x, ca) in a.terms() {
        for (y, cb) in b.terms() {
            let mut w = word(x);
            w.extend(word(y));
            let (s, w) = normalize(w, sig);
            let blade = Blade(w.iter().fold(0u8, |m, i| m | (1 << i)));
            out.set(blade, out.get(blade) + s * ca * cb);
        }
    }
    out
}

#[test]
fn product_matches_generator_words() {
    let mut r = rng(1);
    for sig in signatures() {
        for _ in 0..50 {
            let (a, b) = (random_mv(&mut r, sig), random_mv(&mut r, sig));
            assert!((a * b - oracle_product(&a, &b)).norm_inf() < 1e-13, "{sig}");
        }
    }
}

fn det(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut d = 1.0;
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs())).unwrap();
        if m[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c];
        let pivot = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            let f = row[c] / pivot[c];
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                *x -= f * p;
            }
        }
    }
    d
}

#[test]
fn metric_is_gram_determinant_on_wedges() {
    let mut r = rng(2);
    for sig in signatures() {
        let g = |u: &[f64], v: &[f64]| (0..sig.dim()).map(|i| u[i] * v[i] * sig.square(i)).sum::<f64>();
        for k in 1..=sig.dim() {
            for _ in 0..20 {
                let mut vecs = |_: usize| -> Vec<Vec<f64>> {
                    (0..k).map(|_| (0..sig.dim()).map(|_| r.random_range(-1.0..1.0)).collect()).collect()
                };
                let (us, vs) = (vecs(0), vecs(1));
                let to_mv = |u: &Vec<f64>| {
                    let mut x = Multivector::zero(sig);
                    for (i, c) in u.iter().enumerate() {
                        x.set(Blade::generator(i + 1), *c);
                    }
                    x
                };
                let wedge =
                    |ws: &Vec<Vec<f64>>| ws.iter().skip(1).fold(to_mv(&ws[0]), |acc, u| acc.wedge(&to_mv(u)).unwrap());
                let gram: Vec<Vec<f64>> = us.iter().map(|u| vs.iter().map(|v| g(u, v)).collect()).collect();
                let lib = wedge(&us).metric(&wedge(&vs)).unwrap();
                assert!((lib - det(gram)).abs() < 1e-12, "{sig} k={k}");
            }
        }
    }
}

type C2 = [[Complex64; 2]; 2];

fn mat_mul(a: &C2, b: &C2) -> C2 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

#[test]
fn cl30_rep_matches_pauli_products() {
    let (o, l, i) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0));
    let sigma: [C2; 3] = [[[o, l], [l, o]], [[o, -i], [i, o]], [[l, o], [o, -l]]];
    let identity: C2 = [[l, o], [o, l]];
    let mut r = rng(3);
    for _ in 0..200 {
        let a = random_mv(&mut r, Signature::CL30);
        let mut expect = [[o; 2]; 2];
        for (b, c) in a.terms() {
            let m = word(b).iter().fold(identity, |acc, &g| mat_mul(&acc, &sigma[g]));
            for (row, mrow) in expect.iter_mut().zip(m) {
                for (e, x) in row.iter_mut().zip(mrow) {
                    *e += x * c;
                }
            }
        }
        let got = rep_cl30(&a).unwrap().0;
        for (gr, er) in got.iter().zip(&expect) {
            for (g, e) in gr.iter().zip(er) {
                assert!((g - e).norm() < 1e-14);
            }
        }
    }
}

/// Real 4x4 matrix of left multiplication by `q`.
fn left_matrix(q: Quaternion) -> [[f64; 4]; 4] {
    let [w, x, y, z] = q;
    [[w, -x, -y, -z], [x, w, -z, y], [y, z, w, -x], [z, -y, x, w]]
}

#[test]
fn h_plus_h_matches_real_matrices() {
    let mut r = rng(4);
    let apply = |m: [[f64; 4]; 4], v: Quaternion| -> Quaternion {
        std::array::from_fn(|i| (0..4).map(|k| m[i][k] * v[k]).sum())
    };
    for _ in 0..200 {
        let (a, b) = (random_mv(&mut r, Signature::CL03), random_mv(&mut r, Signature::CL03));
        let (pa, pb, pab) = (rep_h_plus_h(&a).unwrap(), rep_h_plus_h(&b).unwrap(), rep_h_plus_h(&(a * b)).unwrap());
        let plus = apply(left_matrix(pa.plus), pb.plus);
        let minus = apply(left_matrix(pa.minus), pb.minus);
        for k in 0..4 {
            assert!((pab.plus[k] - plus[k]).abs() < 1e-13);
            assert!((pab.minus[k] - minus[k]).abs() < 1e-13);
        }
    }
    // the unit dictionary satisfies i j = k
    let unit = |b: &[usize]| rep_h_plus_h(&Multivector::basis(Signature::CL03, b)).unwrap().plus;
    let (i, j) = (unit(&[2, 3]), unit(&[1, 3]).map(|x| -x));
    assert_eq!(apply(left_matrix(i), j), unit(&[1, 2]));
}

/// Solves `G x = b` by Gaussian elimination with partial pivoting.
fn solve(mut g: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| g[i][c].abs().total_cmp(&g[j][c].abs())).unwrap();
        g.swap(p, c);
        b.swap(p, c);
        let (pivot, bc) = (g[c].clone(), b[c]);
        for (row, br) in g.iter_mut().zip(b.iter_mut()).skip(c + 1) {
            let f = row[c] / pivot[c];
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                *x -= f * p;
            }
            *br -= f * bc;
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|k| g[r][k] * x[k]).sum();
        x[r] = (b[r] - s) / g[r][r];
    }
    x
}

#[test]
fn tetrad_coefficients_match_gram_solve() {
    let e1 = blade30(&[1]);
    let j = blade30(&[1, 2, 3]);
    let one = Multivector::one(Signature::CL30);
    let (fp, fm) = ((one + blade30(&[3])).scale(0.5), (one - blade30(&[3])).scale(0.5));
    let tetrad = [fp, fp * e1, fm * e1, fm];
    // real basis: each tetrad element and its J multiple
    let basis: Vec<Multivector> = tetrad.iter().flat_map(|t| [*t, j * *t]).collect();
    let dot = |a: &Multivector, b: &Multivector| a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x * y).sum::<f64>();
    let gram: Vec<Vec<f64>> = basis.iter().map(|a| basis.iter().map(|b| dot(a, b)).collect()).collect();
    let mut r = rng(5);
    for _ in 0..200 {
        let k =
            Multivector::from_coeffs(Signature::CL30, &(0..8).map(|_| r.random_range(-1.0..1.0)).collect::<Vec<_>>());
        let m = k * k.reverse();
        let x = solve(gram.clone(), basis.iter().map(|b| dot(b, &m)).collect());
        let t = tetrad_decompose(&m).unwrap();
        let got = [t.oo, t.oi, t.io, t.ii];
        for (c, pair) in got.iter().zip(x.chunks(2)) {
            assert!((c.re - pair[0]).abs() < 1e-12 && (c.im - pair[1]).abs() < 1e-12);
        }
    }
}

/// Residual of the free equation from a five-point stencil on point values.
fn stencil_residual(params: &PlaneWaveParams, pt: SpacetimePoint) -> f64 {
    let h = 1e-3;
    let d = |mu: usize| {
        let at = |s: f64| planewave(params, &pt.shifted(mu, s * h)).unwrap();
        (at(-2.0) - at(-1.0).scale(8.0) + at(1.0).scale(8.0) - at(2.0)).scale(1.0 / (12.0 * h))
    };
    let psi = planewave(params, &pt).unwrap();
    let lhs = (1..=3).fold(d(0), |acc, k| acc + blade30(&[k]) * d(k));
    (lhs + psi.involute().scale(params.m) * blade30(&[1, 2])).norm_inf()
}

#[test]
fn plane_waves_satisfy_stencil_equation() {
    let mut r = rng(6);
    for _ in 0..20 {
        let m = r.random_range(0.3..2.0);
        let p = [r.random_range(-1.0..1.0), r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)];
        let pt = SpacetimePoint::new(r.random_range(-1.0..1.0), [r.random_range(-1.0..1.0), 0.3, -0.2]);
        for branch in [Branch::Positive, Branch::Negative] {
            for spin in [Spin::Up, Spin::Down] {
                let res = stencil_residual(&PlaneWaveParams::new(branch, spin, p, m), pt);
                assert!(res < 1e-8, "{res}");
            }
        }
    }
}

#[test]
fn lounesto_recovers_constructed_parts() {
    let mut r = rng(7);
    let j = blade30(&[1, 2, 3]);
    for _ in 0..200 {
        let rho: f64 = r.random_range(0.1..4.0);
        let beta = r.random_range(-3.0..3.0);
        let mut x = Multivector::zero(Signature::CL30);
        for idx in [&[1][..], &[2], &[3], &[1, 2], &[1, 3], &[2, 3]] {
            x += blade30(idx).scale(r.random_range(-1.0..1.0));
        }
        let rotor = x.exp();
        let psi = (j.scale(beta / 2.0).exp() * rotor).scale(rho.sqrt());
        let d = lounesto_decompose(&psi).unwrap();
        assert!((d.rho - rho).abs() < 1e-10 * rho.max(1.0));
        assert!((d.beta - beta).abs() < 1e-10);
        assert!((d.rotor - rotor).norm_inf() < 1e-10 * rotor.norm_inf());
    }
    // center-valued scalars act on the rotor as a phase
    let z = CenterScalar::new(0.0, 2.0).to_multivector();
    let d = lounesto_decompose(&z).unwrap();
    assert!((d.rho - 4.0).abs() < 1e-15 && (d.beta - std::f64::consts::PI).abs() < 1e-15);
}
