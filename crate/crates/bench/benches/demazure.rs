use criterion::{criterion_group, criterion_main, Criterion};
use stretchlie::{
    catalog, default_cutoff, demazure_dim, enumerate_embeddings, generate_roots, longest_element,
    DominantWeight,
};

fn bench_longest_element(c: &mut Criterion) {
    let gcm = catalog("E8").unwrap();
    let roots = generate_roots(&gcm, default_cutoff(&gcm).unwrap()).unwrap();
    let w0 = longest_element(&gcm, &roots).unwrap();
    let adjoint = DominantWeight::fundamental(&gcm, 7);
    c.bench_function("demazure_dim E8 adjoint w0", |b| {
        b.iter(|| demazure_dim(&adjoint, &w0).unwrap())
    });
}

fn bench_embedding_row(c: &mut Criterion) {
    let spec = enumerate_embeddings("E7").unwrap().into_iter().next().unwrap();
    // Largest desk-scale E7 row.
    let node = (0..7)
        .max_by_key(|&i| {
            let gcm = spec.source.clone();
            let roots = generate_roots(&gcm, 64).unwrap();
            let lam = DominantWeight::fundamental(&gcm, i);
            stretchlie::weyl_dim(&gcm, &lam, &roots).unwrap()
        })
        .unwrap();
    let mut coeffs = vec![0i64; spec.target.node_count()];
    coeffs[spec.psi_weights[node]] = 1;
    let anchor = DominantWeight::new(&spec.target, coeffs).unwrap();
    c.bench_function("demazure_dim E7 largest affine row", |b| {
        b.iter(|| demazure_dim(&anchor, &spec.w_iota).unwrap())
    });
}

criterion_group!(benches, bench_longest_element, bench_embedding_row);
criterion_main!(benches);
