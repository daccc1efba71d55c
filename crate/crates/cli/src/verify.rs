//! Per-instance verification suites. Work fans out over group elements with
//! rayon; results come back in canonical element order, so reports are
//! deterministic apart from timings.

use std::str::FromStr;
use std::time::Instant;

use preproj_core::algebra::Side;
use preproj_core::field::Field;
use preproj_core::module::ModuleRep;
use preproj_core::tilting::{
    annihilator_check, ascent_equivalence_check, dimension_check, generalized_simple_quotient_check, hasse_edge_check,
    ideal_of_weyl, itrigid_set, mutation_check, sttilt_node, torsion_pair_report, MatchKind, MutationCase,
};
use preproj_core::weyl::{ElementId, WeylGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::instance::Instance;
use crate::report::{module_json, CheckEntry, SampleInfo, Status, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    TheoremA,
    TheoremB,
    Homological,
    Annihilators,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremA => "theorem-a",
            Suite::TheoremB => "theorem-b",
            Suite::Homological => "homological",
            Suite::Annihilators => "annihilators",
            Suite::All => "all",
        }
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::TheoremA, Suite::TheoremB, Suite::Homological, Suite::Annihilators],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Suite::TheoremA, Suite::TheoremB, Suite::Homological, Suite::Annihilators, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// `SEED:K`: check `K` group elements drawn with a seeded ChaCha generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sample {
    pub seed: u64,
    pub size: usize,
}

impl FromStr for Sample {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad sample `{s}`; expected SEED:K");
        let (seed, size) = s.split_once(':').ok_or_else(bad)?;
        Ok(Sample { seed: seed.parse().map_err(|_| bad())?, size: size.parse().map_err(|_| bad())? })
    }
}

/// The identity and the longest element are always included, since several
/// statements single them out.
pub fn sample_elements(weyl: &WeylGroup, sample: Option<Sample>) -> Vec<ElementId> {
    let Some(s) = sample else { return (0..weyl.len()).collect() };
    if s.size >= weyl.len() {
        return (0..weyl.len()).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut out: Vec<ElementId> = rand::seq::index::sample(&mut rng, weyl.len(), s.size).into_iter().collect();
    out.push(weyl.identity());
    out.push(weyl.longest_element());
    out.sort_unstable();
    out.dedup();
    out
}

pub fn run_suite<K: Field>(inst: &Instance<K>, suite: Suite, sample: Option<Sample>) -> VerificationReport {
    let elements = sample_elements(&inst.weyl, sample);
    let ctx = Ctx { inst, elements };
    let mut checks = Vec::new();
    for part in suite.parts() {
        match part {
            Suite::TheoremA => theorem_a(&ctx, &mut checks),
            Suite::TheoremB => theorem_b(&ctx, &mut checks),
            Suite::Homological => homological(&ctx, &mut checks),
            Suite::Annihilators => annihilators(&ctx, &mut checks),
            Suite::All => unreachable!(),
        }
    }
    let sample_info = sample.map(|s| SampleInfo {
        seed: s.seed,
        size: s.size,
        elements: ctx.elements.iter().map(|&w| inst.weyl.label(w)).collect(),
    });
    VerificationReport::new(inst.descriptor.clone(), suite.name(), inst.alg.dim(), inst.weyl.len(), sample_info, checks)
}

struct Ctx<'a, K: Field> {
    inst: &'a Instance<K>,
    elements: Vec<ElementId>,
}

impl<K: Field> Ctx<'_, K> {
    fn label(&self, w: ElementId) -> String {
        self.inst.weyl.label(w)
    }

    fn pairs(&self, pick: impl Fn(ElementId, usize) -> bool) -> Vec<(ElementId, usize)> {
        let n = self.inst.weyl.rank();
        self.elements.iter().flat_map(|&w| (0..n).map(move |i| (w, i))).filter(|&(w, i)| pick(w, i)).collect()
    }
}

/// What a check body produces before timing and status are attached.
struct Outcome {
    items: usize,
    details: Map<String, Value>,
    failures: usize,
    witness: Option<Value>,
    skipped: Option<String>,
}

impl Outcome {
    fn from_results<T>(results: Vec<Result<T, Value>>) -> (Vec<T>, Outcome) {
        let items = results.len();
        let mut ok = Vec::new();
        let mut failures = 0;
        let mut witness = None;
        for r in results {
            match r {
                Ok(t) => ok.push(t),
                Err(w) => {
                    failures += 1;
                    witness.get_or_insert(w);
                }
            }
        }
        (ok, Outcome { items, details: Map::new(), failures, witness, skipped: None })
    }

    fn single(result: Result<(), Value>) -> Outcome {
        Outcome::from_results(vec![result]).1
    }

    fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }
}

fn run(suite: Suite, name: &str, statement: &str, body: impl FnOnce() -> Outcome) -> CheckEntry {
    let start = Instant::now();
    let mut out = body();
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let status = if out.failures > 0 {
        Status::Fail
    } else if out.skipped.is_some() {
        Status::Skipped
    } else {
        Status::Pass
    };
    if status == Status::Fail {
        out.details.insert(String::from("failures"), out.failures.into());
    }
    CheckEntry {
        name: name.to_string(),
        suite: suite.name().to_string(),
        statement: statement.to_string(),
        status,
        items: out.items,
        details: out.details,
        witness: if status == Status::Fail { Some(out.witness.unwrap_or(Value::Null)) } else { None },
        reason: if status == Status::Skipped { out.skipped } else { None },
        wall_time_ms,
    }
}

fn witness(w: &str, message: impl ToString) -> Value {
    json!({ "w": w, "message": message.to_string() })
}

fn witness_wi(w: &str, i: usize, message: impl ToString) -> Value {
    json!({ "w": w, "i": i + 1, "message": message.to_string() })
}

fn theorem_a<K: Field>(ctx: &Ctx<K>, checks: &mut Vec<CheckEntry>) {
    let (inst, suite) = (ctx.inst, Suite::TheoremA);
    let family = &inst.family;

    checks.push(run(suite, "ideals_locally_free", "I_w is locally free as a left and as a right module", || {
        let results = ctx
            .elements
            .par_iter()
            .map(|&w| {
                for side in [Side::Left, Side::Right] {
                    let m = family.ideal(w).module(side);
                    if let Err(e) = m.locally_free_rank() {
                        let mut v = witness(&ctx.label(w), e);
                        v["module"] = module_json(&m);
                        return Err(v);
                    }
                }
                Ok(())
            })
            .collect();
        Outcome::from_results(results).1
    }));

    checks.push(run(suite, "ideal_summands_locally_free", "every nonzero I_w e_k is locally free", || {
        let items: Vec<(ElementId, usize)> = ctx.pairs(|w, k| !family.ideal(w).times_idempotent(k).is_zero());
        let results = items
            .par_iter()
            .map(|&(w, k)| {
                let m = family.ideal(w).summand(k);
                m.locally_free_rank().map(|_| ()).map_err(|e| {
                    let mut v = json!({ "w": ctx.label(w), "k": k + 1, "message": e.to_string() });
                    v["module"] = module_json(&m);
                    v
                })
            })
            .collect();
        Outcome::from_results(results).1
    }));

    let nodes: Vec<Result<bool, Value>> = ctx
        .elements
        .par_iter()
        .map(|&w| {
            sttilt_node(family, &inst.weyl, w)
                .map(|node| node.indecomposables_checked)
                .map_err(|e| witness(&ctx.label(w), e))
        })
        .collect();
    checks.push(run(
        suite,
        "support_tau_tilting_pairs",
        "(I_w, P) with P the sum of A e_k over e_k I_w = 0 is a support tau-tilting pair",
        || Outcome::from_results(nodes.clone()).1,
    ));
    checks.push(run(
        suite,
        "summands_indecomposable",
        "the summands I_w e_k are indecomposable and pairwise non-isomorphic",
        || {
            let (checked, mut out) = Outcome::from_results(nodes.clone());
            let unchecked = checked.iter().filter(|c| !**c).count();
            if out.failures == 0 && unchecked > 0 {
                out.skipped = Some(format!(
                    "characteristic {} is too small for the endomorphism-ring test on {unchecked} of {} nodes",
                    family.algebra().field().characteristic(),
                    checked.len()
                ));
            }
            out
        },
    ));

    checks.push(run(
        suite,
        "meet_irreducible_modules",
        "I_w e_k over meet-irreducible w (unique right ascent k) are nonzero, tau-rigid, indecomposable, pairwise non-isomorphic and locally free",
        || {
            let expected = inst.weyl.meet_irreducibles().len();
            let result = itrigid_set(family, &inst.weyl).map_err(|e| json!({ "message": e.to_string() })).and_then(|members| {
                if members.len() != expected {
                    return Err(json!({ "message": format!("{} members for {expected} meet-irreducibles", members.len()) }));
                }
                for m in &members {
                    if let Err(e) = m.module.locally_free_rank() {
                        let mut v = witness(&ctx.label(m.w), e);
                        v["module"] = module_json(&m.module);
                        return Err(v);
                    }
                }
                Ok(members.iter().map(|m| format!("{}: {}", ctx.label(m.w), m.label)).collect::<Vec<_>>())
            });
            let (ok, out) = Outcome::from_results(vec![result]);
            let out = out.detail("meet_irreducibles", expected);
            match ok.into_iter().next() {
                Some(labels) => out.detail("members", labels),
                None => out,
            }
        },
    ));
}

fn theorem_b<K: Field>(ctx: &Ctx<K>, checks: &mut Vec<CheckEntry>) {
    let (inst, suite) = (ctx.inst, Suite::TheoremB);
    let (family, weyl) = (&inst.family, &inst.weyl);

    checks.push(run(
        suite,
        "reduced_word_independence",
        "every reduced word of w gives the same ideal subspace",
        || {
            let results = ctx
                .elements
                .par_iter()
                .map(|&w| {
                    ideal_of_weyl(family, weyl, w, true)
                        .map(|_| weyl.reduced_words(w).len())
                        .map_err(|e| witness(&ctx.label(w), e))
                })
                .collect();
            let (counts, out) = Outcome::from_results(results);
            out.detail("reduced_words", counts.iter().sum::<usize>())
        },
    ));

    checks.push(run(suite, "ideal_injectivity", "w -> I_w is injective", || {
        let distinct = family.distinct_count();
        let result = if distinct == weyl.len() {
            Ok(())
        } else {
            Err(json!({ "message": format!("{distinct} distinct ideals for {} elements", weyl.len()) }))
        };
        let mut out = Outcome::single(result).detail("distinct_ideals", distinct);
        out.items = weyl.len();
        out
    }));

    checks.push(run(suite, "weak_order_matches_fac_order", "u <=_R v iff I_v lies in Fac I_u", || {
        let modules: Vec<ModuleRep<K>> = (0..weyl.len()).map(|w| family.ideal(w).module(Side::Left)).collect();
        let pairs: Vec<(ElementId, ElementId)> =
            ctx.elements.iter().flat_map(|&u| ctx.elements.iter().map(move |&v| (u, v))).collect();
        let results = pairs
            .par_iter()
            .map(|&(u, v)| {
                let weak = weyl.weak_leq(u, v);
                let fac = modules[v].in_fac(&modules[u]);
                if weak == fac {
                    Ok(weak)
                } else {
                    Err(json!({ "u": ctx.label(u), "v": ctx.label(v), "weak": weak, "fac": fac }))
                }
            })
            .collect();
        let (comparable, out) = Outcome::from_results(results);
        out.detail("comparable_pairs", comparable.iter().filter(|c| **c).count())
    }));

    let hasse: Vec<(ElementId, ElementId, usize)> =
        weyl.weak_order().hasse.into_iter().filter(|&(w, _, _)| ctx.elements.binary_search(&w).is_ok()).collect();
    checks.push(run(
        suite,
        "hasse_edges_are_mutations",
        "a Hasse edge w -> w s_i keeps I_w(1 - e_i) and replaces the summand at i",
        || {
            let results = hasse
                .par_iter()
                .map(|&(w, _, i)| hasse_edge_check(family, weyl, w, i).map_err(|e| witness_wi(&ctx.label(w), i, e)))
                .collect();
            Outcome::from_results(results).1
        },
    ));

    checks.push(run(
        suite,
        "mutation_formula",
        "for l(w s_i) > l(w): I_{w s_i} = I_w(1 - e_i) if I_w I_i = 0, else I_w I_i e_i + I_w(1 - e_i)",
        || {
            let items = ctx.pairs(|w, i| weyl.is_right_ascent(w, i));
            let results = items
                .par_iter()
                .map(|&(w, i)| mutation_check(family, weyl, w, i).map_err(|e| witness_wi(&ctx.label(w), i, e)))
                .collect();
            let (reports, out) = Outcome::from_results(results);
            let count =
                |f: &dyn Fn(&preproj_core::tilting::MutationReport) -> bool| reports.iter().filter(|r| f(r)).count();
            out.detail("subspace_matches", count(&|r| r.matched == MatchKind::Subspace))
                .detail("isomorphism_matches", count(&|r| r.matched == MatchKind::Isomorphism))
                .detail("zero_product_cases", count(&|r| r.case == MutationCase::ZeroProduct))
                .detail("nonzero_product_cases", count(&|r| r.case == MutationCase::NonzeroProduct))
        },
    ));

    checks.push(run(
        suite,
        "ascent_equivalences",
        "l(w s_i) > l(w) iff I_w I_i != I_w; then I_w I_i = I_{w s_i}, otherwise I_w I_i = I_w",
        || {
            let items = ctx.pairs(|_, _| true);
            let results = items
                .par_iter()
                .map(|&(w, i)| {
                    ascent_equivalence_check(family, weyl, w, i).map_err(|e| witness_wi(&ctx.label(w), i, e))
                })
                .collect();
            let (ascents, out) = Outcome::from_results(results);
            out.detail("ascents", ascents.iter().filter(|a| **a).count())
        },
    ));

    checks.push(run(
        suite,
        "duality_and_torsion_classes",
        "D(right I_w) = A/I_{w^-1 w0}, D(left I_w) = A/I_{w0 w^-1}, and I_w is the Fac I_w torsion part of A",
        || {
            let results = ctx
                .elements
                .par_iter()
                .map(|&w| torsion_pair_report(family, weyl, w).map_err(|e| witness(&ctx.label(w), e)))
                .collect();
            let (reports, out) = Outcome::from_results(results);
            let distinct = |f: &dyn Fn(&preproj_core::tilting::TorsionPairReport) -> &Vec<usize>| {
                let mut v: Vec<&Vec<usize>> = reports.iter().map(f).collect();
                v.sort();
                v.dedup();
                v.len()
            };
            out.detail("torsion_classes", reports.len())
                .detail("distinct_generator_dims", distinct(&|r| &r.generator_dims))
                .detail("distinct_cogenerator_dims", distinct(&|r| &r.cogenerator_dims))
        },
    ));

    checks.push(run(
        suite,
        "torsion_free_classes_distinct",
        "the cogenerators A/I_{w^-1 w0} are pairwise distinct",
        || {
            let w0 = weyl.longest_element();
            let mut partners: Vec<&preproj_core::linalg::Subspace<K::Elem>> =
                (0..weyl.len()).map(|w| family.ideal(weyl.mul(weyl.inverse(w), w0)).space()).collect();
            let total = partners.len();
            let mut distinct: Vec<&preproj_core::linalg::Subspace<K::Elem>> = Vec::new();
            for p in partners.drain(..) {
                if !distinct.contains(&p) {
                    distinct.push(p);
                }
            }
            let result = if distinct.len() == total {
                Ok(())
            } else {
                Err(json!({ "message": format!("{} distinct cogenerators for {total} elements", distinct.len()) }))
            };
            let mut out = Outcome::single(result).detail("torsion_free_classes", distinct.len());
            out.items = total;
            out
        },
    ));

    checks.push(run(suite, "complementary_dimensions", "dim I_w + dim I_{w0 w^-1} = dim A", || {
        let results = ctx
            .elements
            .par_iter()
            .map(|&w| dimension_check(family, weyl, w).map_err(|e| witness(&ctx.label(w), e)))
            .collect();
        Outcome::from_results(results).1
    }));

    checks.push(run(
        suite,
        "generalized_simple_quotients",
        "for l(s_i w) > l(w), I_w / I_{s_i w} is a direct sum of copies of E_i",
        || {
            let items = ctx.pairs(|w, i| weyl.is_left_ascent(w, i));
            let results = items
                .par_iter()
                .map(|&(w, i)| {
                    generalized_simple_quotient_check(family, weyl, w, i).map_err(|e| witness_wi(&ctx.label(w), i, e))
                })
                .collect();
            let (ranks, out) = Outcome::from_results(results);
            out.detail("total_copies", ranks.iter().sum::<usize>())
        },
    ));
}

fn homological<K: Field>(ctx: &Ctx<K>, checks: &mut Vec<CheckEntry>) {
    let (inst, suite) = (ctx.inst, Suite::Homological);
    let (family, weyl) = (&inst.family, &inst.weyl);
    let alg = &inst.alg;
    let n = weyl.rank();
    let simples: Vec<ModuleRep<K>> =
        (0..n).map(|i| ModuleRep::generalized_simple(alg.clone(), i, Side::Left)).collect();
    let simples_op: Vec<ModuleRep<K>> =
        (0..n).map(|i| ModuleRep::generalized_simple(alg.clone(), i, Side::Right)).collect();
    let left = |w: ElementId| family.ideal(w).module(Side::Left);
    let right = |w: ElementId| family.ideal(w).module(Side::Right);

    checks.push(run(
        suite,
        "ext_vanishing_at_left_ascents",
        "for l(s_i w) > l(w): Ext^1(I_w, E_i) = 0 = Ext^1(E_i, I_w), computed two ways",
        || {
            let items = ctx.pairs(|w, i| weyl.is_left_ascent(w, i));
            let results = items
                .par_iter()
                .map(|&(w, i)| {
                    let iw = left(w);
                    let e = &simples[i];
                    let dims = [iw.ext1(e), e.ext1(&iw), iw.ext1_by_syzygy(e), e.ext1_by_syzygy(&iw)];
                    if dims == [0; 4] {
                        Ok(())
                    } else {
                        Err(json!({ "w": ctx.label(w), "i": i + 1, "ext_dims": dims }))
                    }
                })
                .collect();
            Outcome::from_results(results).1
        },
    ));

    checks.push(run(suite, "tor_vanishing_left_ideal", "for l(s_i w) > l(w): Tor_1(E'_i, I_w) = 0", || {
        let items = ctx.pairs(|w, i| weyl.is_left_ascent(w, i));
        let results = items
            .par_iter()
            .map(|&(w, i)| match simples_op[i].tor1(&left(w)) {
                0 => Ok(()),
                d => Err(json!({ "w": ctx.label(w), "i": i + 1, "tor1_dim": d })),
            })
            .collect();
        Outcome::from_results(results).1
    }));

    checks.push(run(
        suite,
        "tor_vanishing_right_ideal",
        "for l(w s_i) > l(w): Tor_1(I_w, E_i) = 0 for the right ideal",
        || {
            let items = ctx.pairs(|w, i| weyl.is_right_ascent(w, i));
            let results = items
                .par_iter()
                .map(|&(w, i)| match right(w).tor1(&simples[i]) {
                    0 => Ok(()),
                    d => Err(json!({ "w": ctx.label(w), "i": i + 1, "tor1_dim": d })),
                })
                .collect();
            Outcome::from_results(results).1
        },
    ));

    checks.push(run(
        suite,
        "tensor_dichotomy",
        "E'_i (x) I_w = 0 or Tor_1(E'_i, I_w) = 0, with E'_i (x) I_w = 0 iff I_i I_w = I_w; likewise on the right",
        || {
            let items = ctx.pairs(|_, _| true);
            let results = items
                .par_iter()
                .map(|&(w, i)| {
                    let iw = family.ideal(w);
                    let (l, r) = (left(w), right(w));
                    let (el, er) = (&simples_op[i], &simples[i]);
                    let tl = el.tensor_over(&l);
                    let tr = r.tensor_over(er);
                    let fail = |what: &str| Err(json!({ "w": ctx.label(w), "i": i + 1, "message": what }));
                    if tl != el.tensor_by_presentation(&l) || tr != r.tensor_by_presentation(er) {
                        return fail("tensor dimensions disagree between methods");
                    }
                    if tl != 0 && el.tor1(&l) != 0 {
                        return fail("E'_i (x) I_w and Tor_1(E'_i, I_w) both nonzero");
                    }
                    if (tl == 0) != (family.simple(i).product(iw) == *iw) {
                        return fail("E'_i (x) I_w = 0 iff I_i I_w = I_w");
                    }
                    if tr != 0 && r.tor1(er) != 0 {
                        return fail("I_w (x) E_i and Tor_1(I_w, E_i) both nonzero");
                    }
                    if (tr == 0) != (iw.product(family.simple(i)) == *iw) {
                        return fail("I_w (x) E_i = 0 iff I_w I_i = I_w");
                    }
                    Ok(tl == 0)
                })
                .collect();
            let (zero, out) = Outcome::from_results(results);
            out.detail("vanishing_tensors", zero.iter().filter(|z| **z).count())
        },
    ));

    checks.push(run(
        suite,
        "ext_symmetry",
        "dim Ext^1(M, N) = dim Ext^1(N, M) over M, N in {I_w} + {E_i} + {A}",
        || {
            let mut test: Vec<(String, ModuleRep<K>)> =
                ctx.elements.iter().map(|&w| (format!("I[{}]", ctx.label(w)), left(w))).collect();
            test.extend(simples.iter().enumerate().map(|(i, e)| (format!("E{}", i + 1), e.clone())));
            test.push((String::from("A"), ModuleRep::regular(alg.clone(), Side::Left).0));
            let pairs: Vec<(usize, usize)> =
                (0..test.len()).flat_map(|a| (a..test.len()).map(move |b| (a, b))).collect();
            let results = pairs
                .par_iter()
                .map(|&(a, b)| {
                    let (x, y) = (&test[a].1, &test[b].1);
                    let (d1, d2) = (x.ext1(y), y.ext1(x));
                    if d1 == d2 {
                        Ok(())
                    } else {
                        Err(json!({ "m": test[a].0, "n": test[b].0, "ext_mn": d1, "ext_nm": d2 }))
                    }
                })
                .collect();
            Outcome::from_results(results).1.detail("family_size", test.len())
        },
    ));

    checks.push(run(suite, "self_injectivity", "D(A_A) = _A A and D(_A A) = A_A", || {
        let results = [Side::Left, Side::Right]
            .into_iter()
            .map(|side| {
                let reg = ModuleRep::regular(alg.clone(), side).0;
                let other = ModuleRep::regular(alg.clone(), side.flip()).0;
                if reg.dual().is_isomorphic(&other) {
                    Ok(())
                } else {
                    Err(json!({ "message": format!("dual of the {:?} regular module is not regular", side).to_lowercase() }))
                }
            })
            .collect();
        Outcome::from_results(results).1
    }));
}

fn annihilators<K: Field>(ctx: &Ctx<K>, checks: &mut Vec<CheckEntry>) {
    let (inst, suite) = (ctx.inst, Suite::Annihilators);
    let (family, weyl) = (&inst.family, &inst.weyl);
    let results: Vec<Result<bool, Value>> = ctx
        .elements
        .par_iter()
        .map(|&w| annihilator_check(family, weyl, w).map_err(|e| witness(&ctx.label(w), e)))
        .collect();
    checks.push(run(suite, "annihilator_identity", "ann(I_w) = I_{w0 w^-1} as subspaces", || {
        Outcome::from_results(results.clone()).1
    }));
    checks.push(run(suite, "unique_faithful_node", "I_w is faithful only for w = e", || {
        let faithful: Vec<String> = ctx
            .elements
            .iter()
            .zip(&results)
            .filter(|(_, r)| matches!(r, Ok(true)))
            .map(|(&w, _)| ctx.label(w))
            .collect();
        let result = if faithful == [ctx.label(weyl.identity())] {
            Ok(())
        } else {
            Err(json!({ "faithful": faithful.clone() }))
        };
        let mut out = Outcome::single(result).detail("faithful", faithful);
        out.items = ctx.elements.len();
        out
    }));
}

#[cfg(test)]
mod tests {
    use super::*;
    use preproj_core::cartan::validate_gcm;
    use preproj_core::field::{PrimeField, Rationals};

    fn b2<K: Field>(k: K) -> Instance<K> {
        let cd = validate_gcm(vec![vec![2, -1], vec![-2, 2]], vec![2, 1], None).unwrap();
        Instance::build(&k, Some(String::from("B2")), &cd, None).unwrap()
    }

    #[test]
    fn reports_are_deterministic_and_complete() {
        let inst = b2(Rationals);
        let first = run_suite(&inst, Suite::All, None);
        let second = run_suite(&inst, Suite::All, None);
        assert_eq!(first.to_json_without_timing(), second.to_json_without_timing());
        assert!(first.passed());
        let mut names: Vec<&str> = first.checks.iter().map(|c| c.name.as_str()).collect();
        let total = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), total, "every check appears once");
        let parts: usize = Suite::All.parts().into_iter().map(|s| run_suite(&inst, s, None).checks.len()).sum();
        assert_eq!(parts, total);
    }

    #[test]
    fn sampling_is_seeded_and_keeps_the_extremes() {
        let inst = b2(Rationals);
        let a = sample_elements(&inst.weyl, Some(Sample { seed: 3, size: 2 }));
        assert_eq!(a, sample_elements(&inst.weyl, Some(Sample { seed: 3, size: 2 })));
        assert!(a.contains(&inst.weyl.identity()) && a.contains(&inst.weyl.longest_element()));
        assert!(a.len() <= 4);
        assert_eq!("5:7".parse::<Sample>().unwrap(), Sample { seed: 5, size: 7 });
        assert!("5".parse::<Sample>().is_err());
    }

    #[test]
    fn prime_field_passes_on_b2() {
        let report = run_suite(&b2(PrimeField::new(101).unwrap()), Suite::All, None);
        assert!(report.passed(), "{}", report.summary_table());
    }
}
