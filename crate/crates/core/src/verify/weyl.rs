use super::sample;
use super::Ctx;
use crate::algebra::{blade30, Signature};
use crate::weyl::{
    cus_from_even, f_minus, f_plus, metric_fminus, metric_fminus_product, metric_fplus, metric_fplus_product,
    reduce_to_even, to_cds, to_cvds, to_cvus, transform, SpinorKind, WeylSpinor,
};

fn all_kinds(k: &WeylSpinor) -> [WeylSpinor; 4] {
    let kbar = to_cds(k).expect("CUS");
    [*k, to_cvus(k).expect("CUS"), kbar, to_cvds(&kbar).expect("CDS")]
}

pub(super) fn run(ctx: &mut Ctx) {
    let n = ctx.n();
    let n_rot = ctx.fraction(5);
    let e1 = blade30(&[1]);

    // component relations are assignments, so they hold bit for bit
    ctx.max_check("weyl.component_relations", 0.0, n, |rng| {
        let k = sample::cus(rng);
        let s = to_cvus(&k).expect("CUS");
        let b = to_cds(&k).expect("CUS");
        let d = to_cvds(&b).expect("CDS");
        [
            (s.c1 + k.c2).abs(),
            (s.c2 - k.c1).abs(),
            (b.c1 - k.c1.conj()).abs(),
            (b.c2 - k.c2.conj()).abs(),
            (d.c1 + b.c2).abs(),
            (d.c2 - b.c1).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    });

    ctx.max_check("weyl.conversion_embeddings", 1e-12, n, |rng| {
        let k = sample::cus(rng);
        let x = k.embed();
        let kstar = (to_cvus(&k).expect("CUS").embed() - e1 * x.conjugate()).norm_inf();
        let kbar = to_cds(&k).expect("CUS");
        let bar = (kbar.embed() - e1 * x.reverse()).norm_inf();
        let star = (to_cvds(&kbar).expect("CDS").embed() - (e1 * kbar.embed()).conjugate()).norm_inf();
        kstar.max(bar).max(star)
    });

    ctx.max_check("weyl.diagram_closure", 1e-12, n, |rng| {
        let k = sample::cus(rng);
        let closed = to_cvds(&to_cds(&k).expect("CUS")).expect("CDS");
        (closed.embed() - k.embed().involute()).norm_inf()
    });

    ctx.max_check("weyl.ideal_membership", 1e-15, n, |rng| {
        let [a, b, c, d] = all_kinds(&sample::cus(rng));
        let (fp, fm) = (f_plus(), f_minus());
        [
            (a.embed() * fp - a.embed()).norm_inf(),
            (fp * b.embed() - b.embed()).norm_inf(),
            (fm * c.embed() - c.embed()).norm_inf(),
            (d.embed() * fm - d.embed()).norm_inf(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    });

    ctx.max_check("weyl.reduce_to_even", 1e-15, n, |rng| {
        let psi = sample::multivector(rng, Signature::CL30);
        let r = reduce_to_even(&psi).expect("Cl(3,0)");
        ((r - psi) * f_plus()).norm_inf().max(r.odd_part().norm_inf())
    });

    ctx.max_check("weyl.cus_from_even", 1e-15, n, |rng| {
        let psi = sample::real_even30(rng);
        (cus_from_even(&psi).expect("even").embed() - psi * f_plus()).norm_inf()
    });

    ctx.max_check("weyl.metric_fplus_product", 1e-12, n, |rng| {
        let (k, eta) = (sample::cus(rng), sample::cus(rng));
        (metric_fplus(&k, &eta).expect("CUS") - metric_fplus_product(&k, &eta).expect("CUS")).abs()
    });

    ctx.max_check("weyl.metric_fminus_product", 1e-12, n, |rng| {
        let kbar = to_cds(&sample::cus(rng)).expect("CUS");
        let eta = to_cvds(&to_cds(&sample::cus(rng)).expect("CUS")).expect("CDS");
        (metric_fminus(&kbar, &eta).expect("kinds") - metric_fminus_product(&kbar, &eta).expect("kinds")).abs()
    });

    ctx.max_check("weyl.metric_antisymmetry", 0.0, n, |rng| {
        let (k, eta) = (sample::cus(rng), sample::cus(rng));
        (metric_fplus(&k, &eta).expect("CUS") + metric_fplus(&eta, &k).expect("CUS")).abs()
    });

    ctx.max_check("weyl.metric_fplus_invariance", 1e-12, n_rot, |rng| {
        let r = sample::rotor(rng);
        let (k, eta) = (sample::cus(rng), sample::cus(rng));
        let before = metric_fplus(&k, &eta).expect("CUS");
        let after = metric_fplus(&transform(&r, &k).expect("unit"), &transform(&r, &eta).expect("unit")).expect("CUS");
        (before - after).abs()
    });

    ctx.max_check("weyl.metric_fminus_invariance", 1e-12, n_rot, |rng| {
        let r = sample::rotor(rng);
        let kbar = to_cds(&sample::cus(rng)).expect("CUS");
        let eta = to_cvds(&to_cds(&sample::cus(rng)).expect("CUS")).expect("CDS");
        let before = metric_fminus(&kbar, &eta).expect("kinds");
        let after =
            metric_fminus(&transform(&r, &kbar).expect("unit"), &transform(&r, &eta).expect("unit")).expect("kinds");
        (before - after).abs()
    });

    ctx.max_check("weyl.transform_commutes", 1e-12, n_rot, |rng| {
        let r = sample::rotor(rng);
        let k = sample::cus(rng);
        let t = |s: &WeylSpinor| transform(&r, s).expect("unit");
        let kbar = to_cds(&k).expect("CUS");
        let d = |a: WeylSpinor, b: WeylSpinor| (a.embed() - b.embed()).norm_inf();
        d(t(&to_cvus(&k).expect("CUS")), to_cvus(&t(&k)).expect("CUS"))
            .max(d(t(&kbar), to_cds(&t(&k)).expect("CUS")))
            .max(d(t(&to_cvds(&kbar).expect("CDS")), to_cvds(&t(&kbar)).expect("CDS")))
    });

    ctx.max_check("weyl.transform_stays_in_ideal", 1e-12, n_rot, |rng| {
        let r = sample::rotor(rng);
        all_kinds(&sample::cus(rng))
            .iter()
            .map(|s| {
                let t = transform(&r, s).expect("unit");
                debug_assert_eq!(t.kind, s.kind);
                let direct = match s.kind {
                    SpinorKind::Cus => *r.as_multivector() * s.embed(),
                    SpinorKind::Cvus => s.embed() * r.inverse(),
                    SpinorKind::Cds => s.embed() * r.as_multivector().reverse(),
                    SpinorKind::Cvds => r.as_multivector().involute() * s.embed(),
                };
                (t.embed() - direct).norm_inf()
            })
            .fold(0.0, f64::max)
    });
}
