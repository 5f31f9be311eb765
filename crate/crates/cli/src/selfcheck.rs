//! Seeded spot checks of algebraic identities, for quick sanity runs on a
//! build. The full randomized suites live in the core crate's tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use toeplitz_lab::algebra::rational_to_f64;
use toeplitz_lab::forms::{ExactMatrix, FormBlocks};
use toeplitz_lab::{
    hypo_verdict, inner, psd_check, toeplitz_apply, AnalyticPoly, Convention, GaussianRational, HarmonicSymbol,
};

#[derive(Debug, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub seed: u64,
    pub cases: usize,
    pub properties: Vec<PropertyResult>,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.failed == 0)
    }
}

fn small(rng: &mut ChaCha8Rng) -> GaussianRational {
    let den_re = rng.gen_range(1..=4);
    let den_im = rng.gen_range(1..=4);
    GaussianRational::from_ratios((rng.gen_range(-4..=4), den_re), (rng.gen_range(-4..=4), den_im))
}

fn symbol(rng: &mut ChaCha8Rng, max_deg: usize) -> HarmonicSymbol {
    let terms = rng.gen_range(1..=4);
    HarmonicSymbol::from_terms(
        (0..terms).map(|_| ((rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg)), small(rng))),
    )
}

fn poly(rng: &mut ChaCha8Rng, max_deg: usize) -> AnalyticPoly {
    AnalyticPoly::from_terms((0..=max_deg).map(|k| (k, small(rng))))
}

fn nonzero(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let w = small(rng);
        if w.inv().is_some() {
            return w;
        }
    }
}

/// Each case gets its own generator so results do not depend on thread scheduling.
fn check<F>(name: &'static str, seed: u64, salt: u64, cases: usize, prop: F) -> PropertyResult
where
    F: Fn(&mut ChaCha8Rng) -> bool + Sync,
{
    let passed = (0..cases)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (salt << 32) ^ i as u64);
            prop(&mut rng)
        })
        .count();
    PropertyResult { name, passed, failed: cases - passed }
}

pub fn run(seed: u64, cases: usize) -> Summary {
    let properties = vec![
        check("adjoint-identity", seed, 1, cases, |rng| {
            let (phi, f, g) = (symbol(rng, 3), poly(rng, 4), poly(rng, 4));
            [Convention::Bergman, Convention::Circle].into_iter().all(|conv| {
                inner(&toeplitz_apply(&phi, &f, conv), &g, conv)
                    == inner(&f, &toeplitz_apply(&phi.conj(), &g, conv), conv)
            })
        }),
        check("linearity", seed, 2, cases, |rng| {
            let (phi, psi, f) = (symbol(rng, 3), symbol(rng, 3), poly(rng, 4));
            Convention::ALL.into_iter().all(|conv| {
                toeplitz_apply(&phi.add(&psi), &f, conv)
                    == toeplitz_apply(&phi, &f, conv).add(&toeplitz_apply(&psi, &f, conv))
            })
        }),
        check("w-inversion", seed, 3, cases, |rng| {
            let (phi, psi, w) = (symbol(rng, 2), symbol(rng, 2), nonzero(rng));
            let inv = w.inv().expect("nonzero");
            let a = hypo_verdict(&phi, &psi, &w, 4, Convention::PaperDisk).map(|v| v.is_refuted());
            let b = hypo_verdict(&psi, &phi, &inv, 4, Convention::PaperDisk).map(|v| v.is_refuted());
            a.is_ok() && a == b
        }),
        check("scaled-sum", seed, 4, cases, |rng| {
            let (phi, w) = (symbol(rng, 2), small(rng));
            let blocks = FormBlocks::new(&phi, &phi, 4, Convention::Circle);
            let one_plus = &w + &GaussianRational::from(1);
            blocks.combine(&w) == blocks.self_phi.scale(&GaussianRational::real(one_plus.norm_sqr()))
        }),
        check("psd-witness", seed, 5, cases, |rng| {
            let n = rng.gen_range(1..=6);
            let mut m = ExactMatrix::zeros(n, n);
            for i in 0..n {
                m.set(i, i, GaussianRational::real(small(rng).re().clone()));
                for j in i + 1..n {
                    let v = small(rng);
                    m.set(j, i, v.conj());
                    m.set(i, j, v);
                }
            }
            match psd_check(&m) {
                Ok(cert) => match (&cert.witness, &cert.witness_value) {
                    (Some(x), Some(v)) => m.hermitian_form(x) == *v && rational_to_f64(v) < 0.0,
                    _ => cert.is_psd(),
                },
                Err(_) => false,
            }
        }),
    ];
    Summary { seed, cases, properties }
}
