use typecount_core::field::Gf;
use typecount_core::matrix::{self, Mat, OMatrix};
use typecount_core::simpletypes::*;
use typecount_core::Error;

/// `Tr(C [X, Y])` over `F_q`, with `X, Y` the leading coefficients of the
/// basis vectors.
fn trace_oracle(d: &TypeDatum, x: &OMatrix, y: &OMatrix) -> u32 {
    let f: &Gf = d.residue_field();
    let lead = |m: &OMatrix| m.mat().map(|e| e.digits()[d.k]);
    let (a, b) = (lead(x), lead(y));
    let comm = matrix::sub(f, &matrix::mul(f, &a, &b), &matrix::mul(f, &b, &a));
    let c = d.e_generator.residue();
    matrix::trace(f, &matrix::mul(f, &c, &comm))
}

#[test]
fn unramified_grid() {
    for q in [2u64, 3] {
        for n in [2u32, 3] {
            for m in [2usize, 4] {
                let d = make_minimal_unram(q, n, m).unwrap();
                let p = theta_pairing(&d).unwrap();
                let dim = (n * n - n) as usize;
                assert_eq!(p.basis.len(), dim);
                assert_eq!(p.rank, dim, "q={q} n={n} m={m}");
                assert!(p.is_alternating(d.residue_field()));
                for i in 0..dim {
                    for j in 0..dim {
                        assert_eq!(p.gram[i][j], trace_oracle(&d, &p.basis[i], &p.basis[j]));
                    }
                }
                for c in d.residue_field().units() {
                    let twisted = theta_pairing_with(&d, Extension::DetTwist(c)).unwrap();
                    assert_eq!(twisted.gram, p.gram);
                    assert_eq!(twisted.values, p.values);
                }
            }
        }
    }
}

#[test]
fn values_are_psi_of_gram() {
    let d = make_minimal_unram(3, 2, 2).unwrap();
    let p = theta_pairing(&d).unwrap();
    for (row, vals) in p.gram.iter().zip(&p.values) {
        for (&b, v) in row.iter().zip(vals) {
            assert_eq!(*v, psi0(&d, b));
        }
    }
}

#[test]
fn ramified_pairing() {
    let d = make_minimal_ram(2, 3, 2).unwrap();
    let g = group_data(&d).unwrap();
    assert_eq!(g.w_dim, 2);
    let p = theta_pairing(&d).unwrap();
    assert_eq!(p.rank, 2);
    assert!(p.is_alternating(d.residue_field()));
    assert_eq!(make_minimal_ram(2, 3, 3).unwrap_err(), Error::RamifiedGcd { m: 3, n: 3 });
}

#[test]
fn group_orders_by_enumeration() {
    let d = make_minimal_unram(2, 2, 2).unwrap();
    let g = group_data(&d).unwrap();
    let counted = enumerate_group_orders(&d, 1 << 20).unwrap();
    assert_eq!(counted, (g.h1_order, g.j1_order, g.j_order));
    assert_eq!(g.j_order / g.h1_order, g.w_order(2) * (residue_size(&d) - 1));
}

#[test]
fn trace_bounds() {
    // unramified, residue with irreducible charpoly: at most n fixed points
    let d = make_minimal_unram(2, 2, 2).unwrap();
    let ring = d.ring().clone();
    let comp = Mat::from_vec(2, vec![0u32, 1, 1, 1]);
    let g = OMatrix::from_residues(&ring, &comp);
    let tb = type_trace_bound(&g, &d).unwrap();
    assert!(tb.census <= 2);
    assert_eq!(tb.per_point, 1);
    // split residue: no fixed points
    let d3 = make_minimal_unram(3, 2, 2).unwrap();
    let split = OMatrix::from_residues(d3.ring(), &Mat::from_vec(2, vec![1u32, 0, 0, 2]));
    assert_eq!(type_trace_bound(&split, &d3).unwrap().bound, 0);
    // scalar residue: within the closed form
    let t = ring.uniformizer();
    let one = ring.from_residue(1);
    let h = OMatrix::new(ring.clone(), Mat::from_vec(2, vec![one.clone(), t.clone(), t.clone(), one]));
    let tb = type_trace_bound(&h, &d).unwrap();
    assert!(tb.closed_form.is_some());
    assert!(tb.within_closed_form());
    // central elements are refused
    assert_eq!(
        type_trace_bound(&OMatrix::from_residues(&ring, &matrix::identity(d.residue_field().as_ref(), 2)), &d)
            .unwrap_err(),
        Error::Central
    );
}

#[test]
fn ramified_trace_bound() {
    let d = make_minimal_ram(2, 3, 1).unwrap();
    let ring = d.ring().clone();
    let one = ring.from_residue(1);
    let t = ring.uniformizer();
    let z = ring.from_residue(0);
    let h = OMatrix::new(
        ring.clone(),
        Mat::from_vec(
            3,
            vec![one.clone(), t.clone(), z.clone(), z.clone(), one.clone(), z.clone(), z, t, one],
        ),
    );
    let tb = type_trace_bound(&h, &d).unwrap();
    assert_eq!(tb.cosets, 21);
    assert!(tb.within_closed_form());
}
