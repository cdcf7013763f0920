#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ybq::cohomology::Cochain2;
use ybq::gauss::{RMove, Site};
use ybq::{read_biquandle, Biquandle, BlockConvention, GaussCode, Sign};

pub const SEED: u64 = 0x5eed_2024;

pub fn data(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn data_path(name: &str) -> String {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

pub fn kishino_t() -> Biquandle {
    read_biquandle(&data("kishino_T.bq"), BlockConvention::Definition).unwrap()
}

pub fn code(name: &str) -> GaussCode {
    ybq::parse_gauss_code(&data(name)).unwrap()
}

pub fn cocycle(name: &str, n: usize) -> Cochain2 {
    ybq::cohomology::read_cocycle(&data(name), n).unwrap()
}

fn random_site(code: &GaussCode, rng: &mut ChaCha8Rng) -> Site {
    let c = rng.gen_range(0..code.components().len());
    Site::new(c, rng.gen_range(0..=code.components()[c].len()))
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

pub fn random_r1(code: &GaussCode, rng: &mut ChaCha8Rng) -> RMove {
    RMove::R1 {
        site: random_site(code, rng),
        sign: random_sign(rng),
        over_first: rng.gen(),
    }
}

pub fn random_r2(code: &GaussCode, rng: &mut ChaCha8Rng) -> RMove {
    RMove::R2 {
        over: random_site(code, rng),
        under: random_site(code, rng),
        first_sign: random_sign(rng),
        antiparallel: rng.gen(),
    }
}
