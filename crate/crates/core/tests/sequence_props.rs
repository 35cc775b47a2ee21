use num_traits::Zero;
use proptest::prelude::*;
use riordan_tp::exact::{ints, Scalar};
use riordan_tp::sequences::{
    is_log_concave, is_log_convex, is_pf_finite, is_pf_r_window, SequenceSpec, Tail,
};

/// Every sequence of length `1..=max_len` with entries in `0..=max_val`.
fn all_sequences(max_len: usize, max_val: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for v in 0..=max_val {
                let mut t = s.clone();
                t.push(v);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn log_concave_iff_windowed_pf2() {
    for seq in all_sequences(5, 3) {
        let spec = SequenceSpec::from_integers(&seq, Tail::Zero).unwrap();
        let windowed = is_pf_r_window(&spec, 2, seq.len() + 2).unwrap().holds;
        assert_eq!(is_log_concave(&ints(&seq)).unwrap(), windowed, "{seq:?}");
    }
}

#[test]
fn pf_implies_windowed_pf4() {
    for seq in all_sequences(5, 3) {
        if seq.iter().all(|&v| v == 0) {
            continue;
        }
        if is_pf_finite(&ints(&seq)).unwrap().holds {
            let spec = SequenceSpec::from_integers(&seq, Tail::Zero).unwrap();
            assert!(
                is_pf_r_window(&spec, 4, seq.len() + 4).unwrap().holds,
                "{seq:?}"
            );
        }
    }
}

#[test]
fn log_concavity_is_reversal_invariant() {
    for seq in all_sequences(5, 3) {
        let mut rev = seq.clone();
        rev.reverse();
        assert_eq!(
            is_log_concave(&ints(&seq)).unwrap(),
            is_log_concave(&ints(&rev)).unwrap(),
            "{seq:?}"
        );
    }
}

/// `(a_0..a_{n-2})` and `(a_1..a_{n-1})` are proportional, i.e. the sequence
/// is geometric wherever it is supported.
fn shifts_proportional(seq: &[i64]) -> bool {
    if seq.len() < 3 {
        return true;
    }
    let u = &seq[..seq.len() - 1];
    let v = &seq[1..];
    match u.iter().zip(v).position(|(&x, &y)| x != 0 || y != 0) {
        None => true,
        Some(p) => u.iter().zip(v).all(|(&x, &y)| x * v[p] == y * u[p]),
    }
}

#[test]
fn both_log_convex_and_concave_iff_geometric() {
    for seq in all_sequences(5, 3) {
        let s = ints(&seq);
        let both = is_log_convex(&s).unwrap() && is_log_concave(&s).unwrap();
        assert_eq!(both, shifts_proportional(&seq), "{seq:?}");
    }
}

#[test]
fn quadratic_pf_criterion() {
    // (r, s, t) is PF iff s^2 >= 4rt
    for r in 0..=4i64 {
        for s in 0..=4i64 {
            for t in 0..=4i64 {
                if r == 0 && s == 0 && t == 0 {
                    continue;
                }
                let holds = is_pf_finite(&ints(&[r, s, t])).unwrap().holds;
                assert_eq!(holds, s * s >= 4 * r * t, "({r},{s},{t})");
            }
        }
    }
}

proptest! {
    #[test]
    fn repeat_tail_extends_last_entry(prefix in proptest::collection::vec(0i64..=9, 1..6), n in 0usize..20) {
        let spec = SequenceSpec::from_integers(&prefix, Tail::RepeatLast).unwrap();
        let expected = *prefix.get(n).unwrap_or(prefix.last().unwrap());
        prop_assert_eq!(spec.term(n), Scalar::from_integer(expected.into()));
        let z = SequenceSpec::from_integers(&prefix, Tail::Zero).unwrap();
        prop_assert_eq!(z.term(n).is_zero(), prefix.get(n).is_none_or(|&v| v == 0));
    }

    #[test]
    fn toeplitz_window_is_lower_triangular(prefix in proptest::collection::vec(0i64..=5, 0..5), n in 1usize..7) {
        let spec = SequenceSpec::from_integers(&prefix, Tail::Zero).unwrap();
        let m = spec.toeplitz_window(n);
        for i in 0..n {
            for j in 0..n {
                let expected = if i >= j { spec.term(i - j) } else { Scalar::zero() };
                prop_assert_eq!(&m[(i, j)], &expected);
            }
        }
    }
}
