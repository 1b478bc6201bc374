use std::collections::HashMap;

use bt_cohomology::partitions::{bipartitions_of, partitions_of, Bipartition, Partition};
use bt_cohomology::scalar::factorial;
use bt_cohomology::weyl::{
    bruteforce_typeb, character_table, chi_sym, chi_typeb, sym_class_size, typeb_class_size,
    typeb_order, SignedPermutation, SymClass, TypeBClass, WeylGroup,
};
use bt_cohomology::CharValue;
use num_bigint::BigInt;

fn syt_count(lam: &Partition, memo: &mut HashMap<Partition, u64>) -> u64 {
    if lam.is_empty() {
        return 1;
    }
    if let Some(&c) = memo.get(lam) {
        return c;
    }
    let parts = lam.parts();
    let mut total = 0;
    for i in 0..parts.len() {
        if i + 1 == parts.len() || parts[i + 1] < parts[i] {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            total += syt_count(&Partition::new(smaller).unwrap(), memo);
        }
    }
    memo.insert(lam.clone(), total);
    total
}

#[test]
fn symmetric_orthogonality() {
    for n in 0..=8 {
        let t = character_table::<CharValue>(WeylGroup::Symmetric(n));
        assert_eq!(t.row_orthogonality_failure(), None, "S_{n}");
        assert_eq!(t.column_orthogonality_failure(), None, "S_{n}");
    }
}

#[test]
fn typeb_orthogonality() {
    for a in 0..=5 {
        let t = character_table::<CharValue>(WeylGroup::TypeB(a));
        assert_eq!(t.row_orthogonality_failure(), None, "W_{a}");
        assert_eq!(t.column_orthogonality_failure(), None, "W_{a}");
    }
}

#[test]
fn degrees_count_standard_tableaux() {
    let mut memo = HashMap::new();
    for n in 0..=10 {
        let identity = SymClass(Partition::column(n));
        for lam in partitions_of(n) {
            let value: i64 = chi_sym(&lam, &identity).unwrap();
            assert_eq!(value as u64, syt_count(&lam, &mut memo), "{lam}");
        }
    }
}

#[test]
fn sign_twist_is_transpose() {
    for n in 1..=8 {
        for lam in partitions_of(n) {
            for nu in partitions_of(n) {
                let c = SymClass(nu.clone());
                let x: i64 = chi_sym(&lam, &c).unwrap();
                let y: i64 = chi_sym(&lam.transpose(), &c).unwrap();
                let sgn = if (n - nu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(y, sgn * x, "{lam} at {nu}");
            }
        }
    }
}

#[test]
fn typeb_degree_sum() {
    for a in 0..=6 {
        let identity = TypeBClass(Bipartition::new(Partition::column(a), Partition::empty()));
        let total: BigInt = bipartitions_of(a)
            .iter()
            .map(|ab| {
                let d: BigInt = chi_typeb(ab, &identity).unwrap();
                &d * &d
            })
            .sum();
        assert_eq!(total, typeb_order::<BigInt>(a), "W_{a}");
    }
}

#[test]
fn brute_force_class_sizes() {
    for a in 0..=4 {
        let sizes = bruteforce_typeb(a).unwrap().class_sizes();
        assert_eq!(sizes.len(), bipartitions_of(a).len());
        for (gt, count) in sizes {
            let formula: i64 = typeb_class_size(&TypeBClass(gt.clone()));
            assert_eq!(count as i64, formula, "W_{a} class {gt}");
        }
        let n: i64 = typeb_order(a);
        assert_eq!(bruteforce_typeb(a).unwrap().elements().len() as i64, n);
    }
    assert!(bruteforce_typeb(6).is_err());
}

#[test]
fn symmetric_class_sizes_sum() {
    for n in 0..=9 {
        let total: i64 = partitions_of(n)
            .iter()
            .map(|nu| sym_class_size::<i64>(&SymClass(nu.clone())))
            .sum();
        assert_eq!(total, factorial::<i64>(n));
    }
}

/// Signed permutation as images of `1..=a` in `{±1, …, ±a}`.
fn images(w: &SignedPermutation) -> Vec<i64> {
    w.perm
        .iter()
        .zip(&w.negated)
        .map(|(&p, &neg)| if neg { -(p as i64 + 1) } else { p as i64 + 1 })
        .collect()
}

fn apply(w: &[i64], x: i64) -> i64 {
    let y = w[(x.unsigned_abs() - 1) as usize];
    if x < 0 {
        -y
    } else {
        y
    }
}

fn compose(f: &[i64], g: &[i64]) -> Vec<i64> {
    (1..=f.len() as i64)
        .map(|x| apply(f, apply(g, x)))
        .collect()
}

fn inverse(w: &[i64]) -> Vec<i64> {
    let mut inv = vec![0; w.len()];
    for (i, &y) in w.iter().enumerate() {
        let x = i as i64 + 1;
        inv[(y.unsigned_abs() - 1) as usize] = if y < 0 { -x } else { x };
    }
    inv
}

fn block(w: &[i64], lo: usize, hi: usize) -> Option<SignedPermutation> {
    let mut perm = Vec::new();
    let mut negated = Vec::new();
    for &y in &w[lo..hi] {
        let j = (y.unsigned_abs() - 1) as usize;
        if j < lo || j >= hi {
            return None;
        }
        perm.push(j - lo);
        negated.push(y < 0);
    }
    Some(SignedPermutation { perm, negated })
}

/// `Ind_{W_r × W_s}^{W_a} (χ_α ⊠ ε χ_β)` evaluated by summing over the group.
fn induced_value(ab: &Bipartition, w: &SignedPermutation, group: &[Vec<i64>]) -> i64 {
    let (r, a) = (ab.first.size(), ab.size());
    let w = images(w);
    let mut total = 0i64;
    for g in group {
        let conj = compose(&compose(g, &w), &inverse(g));
        let (Some(left), Some(right)) = (block(&conj, 0, r), block(&conj, r, a)) else {
            continue;
        };
        let underlying = |c: TypeBClass| {
            let mut parts = c.0.first.parts().to_vec();
            parts.extend_from_slice(c.0.second.parts());
            parts.sort_unstable_by(|x, y| y.cmp(x));
            (Partition::new(parts).unwrap(), c.0.second.len())
        };
        let (l, _) = underlying(left.class());
        let (rr, negative) = underlying(right.class());
        let x: i64 = chi_sym(&ab.first, &SymClass(l)).unwrap();
        let y: i64 = chi_sym(&ab.second, &SymClass(rr)).unwrap();
        total += if negative % 2 == 0 { x * y } else { -x * y };
    }
    let sub = typeb_order::<i64>(r) * typeb_order::<i64>(a - r);
    assert_eq!(total % sub, 0);
    total / sub
}

#[test]
fn typeb_values_match_induced_characters() {
    for a in 0..=4 {
        let g = bruteforce_typeb(a).unwrap();
        let elements = g.elements();
        let group: Vec<Vec<i64>> = elements.iter().map(images).collect();
        let mut reps: HashMap<TypeBClass, SignedPermutation> = HashMap::new();
        for w in &elements {
            reps.entry(w.class()).or_insert_with(|| w.clone());
        }
        for ab in bipartitions_of(a) {
            for (class, w) in &reps {
                let value: i64 = chi_typeb(&ab, class).unwrap();
                assert_eq!(value, induced_value(&ab, w, &group), "{ab} at {}", class.0);
            }
        }
    }
}

#[test]
fn typeb_inflation_and_twist() {
    for a in 1..=5 {
        for ab in bipartitions_of(a) {
            for gt in bipartitions_of(a) {
                let c = TypeBClass(gt.clone());
                let x: i64 = chi_typeb(&ab, &c).unwrap();
                let y: i64 = chi_typeb(&ab.swapped(), &c).unwrap();
                let eps = if gt.second.len() % 2 == 0 { 1 } else { -1 };
                assert_eq!(y, eps * x, "{ab} at {gt}");
            }
        }
        for lam in partitions_of(a) {
            let ab = Bipartition::new(lam.clone(), Partition::empty());
            for gt in bipartitions_of(a) {
                let mut cycles = gt.first.parts().to_vec();
                cycles.extend_from_slice(gt.second.parts());
                cycles.sort_unstable_by(|x, y| y.cmp(x));
                let x: i64 = chi_typeb(&ab, &TypeBClass(gt.clone())).unwrap();
                let y: i64 = chi_sym(&lam, &SymClass(Partition::new(cycles).unwrap())).unwrap();
                assert_eq!(x, y);
            }
        }
    }
}

#[test]
fn machine_and_big_integers_agree() {
    for ab in bipartitions_of(5) {
        for gt in bipartitions_of(5) {
            let c = TypeBClass(gt);
            let small: i32 = chi_typeb(&ab, &c).unwrap();
            let big: BigInt = chi_typeb(&ab, &c).unwrap();
            assert_eq!(BigInt::from(small), big);
        }
    }
}

#[test]
fn size_mismatch_is_an_error() {
    let lam = Partition::new(vec![2, 1]).unwrap();
    assert!(chi_sym::<i64>(&lam, &SymClass(Partition::row(4))).is_err());
    let ab = Bipartition::new(lam, Partition::row(1));
    assert!(chi_typeb::<i64>(
        &ab,
        &TypeBClass(Bipartition::new(Partition::row(3), Partition::empty()))
    )
    .is_err());
}
