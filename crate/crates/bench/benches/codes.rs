use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dupcode::channel::{descendants_restricted, descendants_unrestricted, simulate, Noise, DEFAULT_CAP};
use dupcode::detect::{enumerate_code, DetectCodeSpec};
use dupcode::verify::{verify_1nd, verify_ecc};
use dupcode::{ecc_decode, ecc_encode, phi, phi_inv, root, Alphabet, EccCode, Word};

fn word(s: &str, q: u32) -> Word {
    Word::parse(s, Alphabet::new(q).unwrap()).unwrap()
}

fn transform(c: &mut Criterion) {
    let x = word(&"1012012121".repeat(20), 3);
    c.bench_function("phi/200", |b| b.iter(|| phi(black_box(&x), 3).unwrap()));
    let pair = phi(&x, 3).unwrap();
    c.bench_function("phi_inv/200", |b| b.iter(|| phi_inv(black_box(&pair))));
    c.bench_function("root/200", |b| b.iter(|| root(black_box(&x), 3).unwrap()));
}

fn cones(c: &mut Criterion) {
    let x = word("0110100", 2);
    let mut g = c.benchmark_group("descendants");
    for t in 1..=3 {
        g.bench_with_input(BenchmarkId::new("restricted", t), &t, |b, &t| {
            b.iter(|| descendants_restricted(&x, 2, t, 1, DEFAULT_CAP).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("unrestricted", t), &t, |b, &t| {
            b.iter(|| descendants_unrestricted(&x, 2, t, 1, DEFAULT_CAP).unwrap())
        });
    }
    g.finish();
}

fn ecc(c: &mut Criterion) {
    let code = EccCode::new(3, 3, 2).unwrap();
    let u = code.payloads(16).unwrap().pop().unwrap();
    let cw = ecc_encode(&u, &code).unwrap();
    let (y, _) = simulate(&cw, 3, 4, Noise::Unrestricted, 11).unwrap();
    c.bench_function("ecc/encode", |b| b.iter(|| ecc_encode(black_box(&u), &code).unwrap()));
    c.bench_function("ecc/decode", |b| b.iter(|| ecc_decode(black_box(&y), &code)));
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    let code = enumerate_code(&DetectCodeSpec::cij(2, 2, 7, 0, 0).unwrap(), DEFAULT_CAP).unwrap();
    g.bench_function("1nd/q2k2n7", |b| b.iter(|| verify_1nd(&code, 2, 2).unwrap()));
    let ecc = EccCode::new(2, 3, 2).unwrap();
    g.bench_function("ecc/q2k3r2", |b| b.iter(|| verify_ecc(&ecc, 1, DEFAULT_CAP).unwrap()));
    g.finish();
}

criterion_group!(benches, transform, cones, ecc, verify);
criterion_main!(benches);
