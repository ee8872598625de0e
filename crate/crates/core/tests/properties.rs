use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use alcove_crystals::alcove::{AlcoveCrystal, AlcoveElement};
use alcove_crystals::chains::LambdaChain;
use alcove_crystals::crystalgraph::{enumerate, Crystal, Direction, Stat, Tensor};
use alcove_crystals::limits::{
    varpi, varpi_dual, varpi_dual_infinity, varpi_infinity, varpi_infinity_at, verify_dual_iso,
};
use alcove_crystals::littelmann::{PLPath, PathCrystal};
use alcove_crystals::rootsys::{q, Root, RootSystem, Weight, WeylElement};
use proptest::prelude::*;

const TYPES: &[&str] = &["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"];

fn rs(t: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::from_type(t).unwrap())
}

fn system() -> impl Strategy<Value = Arc<RootSystem>> {
    prop::sample::select(TYPES).prop_map(rs)
}

fn small_system() -> impl Strategy<Value = Arc<RootSystem>> {
    prop::sample::select(&["A2", "A3", "B2", "G2"][..]).prop_map(rs)
}

/// A system with a dominant weight of coefficients at most `max`.
fn with_weight(sys: impl Strategy<Value = Arc<RootSystem>>, max: i64) -> impl Strategy<Value = (Arc<RootSystem>, Weight)> {
    sys.prop_flat_map(move |r| {
        let n = r.rank();
        (Just(r), prop::collection::vec(0..=max, n).prop_map(|c| Weight::from_ints(&c)))
    })
}

fn word(n: usize, len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=n, 0..=len)
}

/// Walks `word` from `start`, skipping letters that give 0.
fn walk<C: Crystal>(c: &C, start: C::Elem, word: &[usize]) -> C::Elem {
    word.iter().fold(start, |b, &i| c.f(&b, i).unwrap_or(b))
}

fn axioms_at<C: Crystal>(c: &C, b: &C::Elem) -> Result<(), TestCaseError> {
    for i in 1..=c.rank() {
        let a_i = c.root_system().simple_root_weight(i).clone();
        let wt = c.weight(b);
        prop_assert_eq!(c.phi(b, i), c.epsilon(b, i).shift(wt.pair_simple(i).to_integer()));
        if let Some(x) = c.f(b, i) {
            let back = c.e(&x, i);
            prop_assert_eq!(back.as_ref(), Some(b));
            let want = &wt - &a_i;
            prop_assert_eq!(c.weight(&x), want);
            prop_assert_eq!(c.epsilon(&x, i), c.epsilon(b, i).shift(1));
            prop_assert_eq!(c.phi(&x, i), c.phi(b, i).shift(-1));
        }
        if let Some(x) = c.e(b, i) {
            let back = c.f(&x, i);
            prop_assert_eq!(back.as_ref(), Some(b));
            let want = &wt + &a_i;
            prop_assert_eq!(c.weight(&x), want);
        }
    }
    Ok(())
}

fn closure_roots(r: &RootSystem) -> usize {
    let n = r.rank();
    let mut seen: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    let mut queue: VecDeque<Root> = seen.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for i in 1..=n {
            let y = r.simple_reflection(i).apply(&x);
            if !seen.contains(&y) {
                seen.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    seen.iter().filter(|x| x.is_positive()).count()
}

fn bfs_lengths(r: &RootSystem, radius: usize) -> HashMap<WeylElement, usize> {
    let id = WeylElement::identity(r.rank());
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if d == radius {
            continue;
        }
        for i in 1..=r.rank() {
            let v = w.compose(r.simple_reflection(i));
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reflections_are_involutions((r, mu) in with_weight(system(), 3)) {
        for b in 0..r.num_positive() {
            prop_assert_eq!(r.reflect(b, &r.reflect(b, &mu)), mu.clone());
        }
    }

    #[test]
    fn action_is_contravariant((r, mu) in with_weight(system(), 3)) {
        let n = r.rank();
        for i in 1..=n {
            let s = r.simple_reflect(i, &mu);
            for j in 1..=n {
                let img = r.simple_reflection(i).apply(&Root::simple(n, j));
                let (b, pos) = r.signed_index(&img).unwrap();
                let rhs = mu.pair(r.coroot(b));
                prop_assert_eq!(s.pair_simple(j), if pos { rhs } else { -rhs });
            }
        }
    }

    #[test]
    fn length_matches_shortest_word(r in prop::sample::select(&["A2", "A3", "B2", "B3", "G2", "A4"][..]).prop_map(rs),
                                     w in prop::collection::vec(1usize..=4, 0..=6)) {
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let dist = bfs_lengths(&r, 6);
        let e = r.from_word(&w);
        prop_assert_eq!(r.length(&e), dist[&e]);
    }

    #[test]
    fn lex_chains_validate((r, lam) in with_weight(system(), 2)) {
        let c = LambdaChain::lex(&r, &lam).unwrap();
        prop_assert!(c.validate());
        let len: i64 = (0..r.num_positive()).map(|b| lam.pair(r.coroot(b)).to_integer()).sum();
        prop_assert_eq!(c.len() as i64, len);
    }

    #[test]
    fn concatenations_validate((r, lam) in with_weight(small_system(), 2), m in prop::collection::vec(0i64..=2, 4)) {
        let mu = Weight::from_ints(&m[..r.rank()]);
        let a = LambdaChain::lex(&r, &lam).unwrap();
        let b = LambdaChain::lex(&r, &mu).unwrap();
        prop_assert!(a.concat(&b).unwrap().validate());
    }

    #[test]
    fn lex_of_multiple_of_rho_is_repeated(r in prop::sample::select(&["A1", "A2", "A3", "B2", "B3", "C3", "G2"][..]).prop_map(rs),
                                          k in 1i64..=4) {
        let n = r.rank();
        let one = LambdaChain::lex(&r, &Weight::rho(n)).unwrap();
        let mut rep = one.clone();
        for _ in 1..k {
            rep = rep.concat(&one).unwrap();
        }
        let lex = LambdaChain::lex(&r, &(&Weight::rho(n) * q(k))).unwrap();
        prop_assert_eq!(lex.entries(), rep.entries());
    }

    #[test]
    fn finite_alcove_axioms((r, lam) in with_weight(small_system(), 2), w in word(3, 12)) {
        let c = AlcoveCrystal::highest_weight(&r, &lam).unwrap();
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let j = walk(&c, AlcoveElement::empty(), &w);
        prop_assert!(c.is_admissible(&j).unwrap());
        axioms_at(&c, &j)?;
        for i in 1..=r.rank() {
            for x in [c.f(&j, i), c.e(&j, i)].into_iter().flatten() {
                prop_assert!(c.is_admissible(&x).unwrap());
            }
        }
    }

    #[test]
    fn dual_alcove_axioms((r, lam) in with_weight(small_system(), 2), w in word(3, 12)) {
        let c = AlcoveCrystal::dual_highest_weight(&r, &lam).unwrap();
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let j = w.iter().fold(AlcoveElement::empty(), |b, &i| c.e(&b, i).unwrap_or(b));
        axioms_at(&c, &j)?;
        // the mirror identifies Al∨(Γ) with Al of the reversed chain, swapping e and f
        let m = c.mirror_crystal();
        for i in 1..=r.rank() {
            prop_assert_eq!(c.f(&j, i).map(|x| c.mirror(&x)), m.e(&c.mirror(&j), i));
            prop_assert_eq!(c.e(&j, i).map(|x| c.mirror(&x)), m.f(&c.mirror(&j), i));
            prop_assert_eq!(m.weight(&c.mirror(&j)), -&c.weight(&j));
        }
    }

    #[test]
    fn infinity_upper_regular(r in small_system(), w in word(3, 10)) {
        let c = AlcoveCrystal::infinity(&r);
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let j = walk(&c, AlcoveElement::empty(), &w);
        prop_assert_eq!(c.f_string(&AlcoveElement::empty(), &w), Some(j.clone()));
        axioms_at(&c, &j)?;
        for i in 1..=r.rank() {
            let eps = c.epsilon(&j, i);
            let top = (0..eps).try_fold(j.clone(), |b, _| c.e(&b, i));
            prop_assert!(top.is_some());
            prop_assert_eq!(c.e(&top.unwrap(), i), None);
        }
    }

    #[test]
    fn window_is_stable(r in small_system(), w in word(3, 10)) {
        let c = AlcoveCrystal::infinity(&r);
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let j = walk(&c, AlcoveElement::empty(), &w);
        for i in 1..=r.rank() {
            prop_assert_eq!(c.f_with_window(&j, i, 0), c.f_with_window(&j, i, 2));
            prop_assert_eq!(c.e_with_window(&j, i, 0), c.e_with_window(&j, i, 2));
        }
    }

    #[test]
    fn projection_commutes(r in small_system(), w in word(3, 8), extra in 0usize..3) {
        let c = AlcoveCrystal::infinity(&r);
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let j = walk(&c, AlcoveElement::empty(), &w);
        let (k0, _, _) = c.minimal_projection(&j).unwrap();
        let k = k0 + extra;
        let t = c.projection_target(k).unwrap();
        let p = c.project(&t, &j, k).unwrap();
        prop_assert_eq!(c.include(&t, &p, k).unwrap(), j.clone());
        for i in 1..=r.rank() {
            if let (Some(a), Some(b)) = (c.f(&j, i).and_then(|x| c.project(&t, &x, k)), t.f(&p, i)) {
                prop_assert_eq!(a, b);
            }
            if let Some(x) = c.e(&j, i) {
                prop_assert_eq!(c.project(&t, &x, k), t.e(&p, i));
            }
        }
    }

    #[test]
    fn shift_equivariance((r, lam) in with_weight(small_system(), 1), m in prop::collection::vec(0i64..=1, 4), w in word(3, 8)) {
        let mu = Weight::from_ints(&m[..r.rank()]);
        let c = AlcoveCrystal::highest_weight(&r, &lam).unwrap();
        let s = c.shift_map(&mu).unwrap();
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let j = walk(&c, AlcoveElement::empty(), &w);
        let sj = s.apply(&j);
        for i in 1..=r.rank() {
            for (x, y) in [(c.f(&j, i), sj.as_ref().and_then(|b| s.target().f(b, i))),
                           (c.e(&j, i), sj.as_ref().and_then(|b| s.target().e(b, i)))] {
                if let (Some(x), Some(y)) = (x.and_then(|x| s.apply(&x)), y) {
                    prop_assert_eq!(x, y);
                }
            }
        }
    }

    #[test]
    fn finite_paths((r, lam) in with_weight(small_system(), 2), w in word(3, 12)) {
        let c = PathCrystal::finite(&r, &lam).unwrap();
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let p = walk(&c, c.generator().clone(), &w);
        axioms_at(&c, &p)?;
        for i in 1..=r.rank() {
            prop_assert_eq!(p.f(&r, i).map(|x| x.dualize()), p.dualize().e(&r, i));
            prop_assert_eq!(p.e(&r, i).map(|x| x.dualize()), p.dualize().f(&r, i));
        }
        prop_assert_eq!(p.dualize().dualize(), p.clone());
        prop_assert_eq!(PLPath::from_json(r.rank(), &p.to_json()).unwrap(), p);
    }

    #[test]
    fn infinite_paths(r in small_system(), w in word(3, 10)) {
        let c = PathCrystal::infinity(&r);
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let p = w.iter().try_fold(c.generator().clone(), |b, &i| c.f(&b, i));
        prop_assert!(p.is_some(), "f is total on extended paths");
        let p = p.unwrap();
        axioms_at(&c, &p)?;
        let d = PathCrystal::dual_infinity(&r);
        let x = p.dualize();
        axioms_at(&d, &x)?;
        for i in 1..=r.rank() {
            prop_assert_eq!(p.f(&r, i).map(|y| y.dualize()), x.e(&r, i));
            prop_assert_eq!(d.epsilon(&x, i), c.phi(&p, i));
        }
    }

    #[test]
    fn varpi_is_dual_iso((r, lam) in with_weight(small_system(), 3), w in word(3, 12)) {
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let c = AlcoveCrystal::highest_weight(&r, &lam).unwrap();
        let j = walk(&c, AlcoveElement::empty(), &w);
        let tgt = PathCrystal::finite(&r, &-&lam).unwrap();
        let rep = verify_dual_iso(&c, &[j], |x| varpi(&c, x), &tgt);
        prop_assert!(rep.is_clean(), "{}", rep);
        let d = AlcoveCrystal::dual_highest_weight(&r, &lam).unwrap();
        let x = w.iter().fold(AlcoveElement::empty(), |b, &i| d.e(&b, i).unwrap_or(b));
        let tgt = PathCrystal::finite(&r, &lam).unwrap();
        let rep = verify_dual_iso(&d, &[x], |y| varpi_dual(&d, y), &tgt);
        prop_assert!(rep.is_clean(), "{}", rep);
    }

    #[test]
    fn varpi_infinity_is_dual_iso(r in small_system(), w in word(3, 7)) {
        let w: Vec<usize> = w.into_iter().filter(|&i| i <= r.rank()).collect();
        let c = AlcoveCrystal::infinity(&r);
        let j = walk(&c, AlcoveElement::empty(), &w);
        let tgt = PathCrystal::dual_infinity(&r);
        let rep = verify_dual_iso(&c, &[j.clone()], |x| varpi_infinity(&c, x), &tgt);
        prop_assert!(rep.is_clean(), "{}", rep);
        let (k0, _, _) = c.minimal_projection(&j).unwrap();
        let base = varpi_infinity(&c, &j).unwrap();
        for k in k0..k0 + 4 {
            let at = varpi_infinity_at(&c, &j, k).unwrap();
            prop_assert_eq!(at.as_ref(), Some(&base));
        }
        let d = c.mirror_crystal();
        let dual = varpi_dual_infinity(&d, &c.mirror(&j)).unwrap();
        prop_assert_eq!(dual, base.dualize());
    }
}

#[test]
fn positive_root_counts_match_closure() {
    for t in TYPES.iter().chain(&["A5", "B4", "C4", "D5", "F4", "E6"]) {
        let r = rs(t);
        assert_eq!(r.num_positive(), closure_roots(&r), "{t}");
    }
}

#[test]
fn tensor_is_associative() {
    let r = rs("A2");
    let crystals: Vec<AlcoveCrystal> = [[1, 0], [0, 1]]
        .iter()
        .map(|c| AlcoveCrystal::highest_weight(&r, &Weight::from_ints(c)).unwrap())
        .collect();
    let elems = |c: &AlcoveCrystal| enumerate(c, &[AlcoveElement::empty()], Direction::Down, None).unwrap().elements;
    for a in &crystals {
        for b in &crystals {
            for c in &crystals {
                let left = Tensor::new(Tensor::new(a, b), c);
                let right = Tensor::new(a, Tensor::new(b, c));
                let re = |((x, y), z): ((AlcoveElement, AlcoveElement), AlcoveElement)| (x, (y, z));
                for x in elems(a) {
                    for y in elems(b) {
                        for z in elems(c) {
                            let l = ((x.clone(), y.clone()), z.clone());
                            let rr = re(l.clone());
                            assert_eq!(left.weight(&l), right.weight(&rr));
                            for i in 1..=2 {
                                assert_eq!(left.f(&l, i).map(re), right.f(&rr, i));
                                assert_eq!(left.e(&l, i).map(re), right.e(&rr, i));
                                assert_eq!(left.epsilon(&l, i), right.epsilon(&rr, i));
                                assert_eq!(left.phi(&l, i), right.phi(&rr, i));
                                assert!(left.epsilon(&l, i) > Stat::NegInf);
                            }
                        }
                    }
                }
            }
        }
    }
}
