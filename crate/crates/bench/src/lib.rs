//! Shared inputs for the criterion benchmarks.

use dstrig_core::{DeSitterTriangle, GeneratorConfig, ProperName, TriangleSampler};

/// `count` seeded triangles of each of the four area-bearing types.
pub fn triangle_mix(count: usize, seed: u64) -> Vec<DeSitterTriangle> {
    ProperName::NON_NULL
        .into_iter()
        .flat_map(|name| {
            let mut s = TriangleSampler::new(GeneratorConfig::new(name, seed))
                .expect("default generator config is valid");
            (0..count)
                .map(|_| {
                    s.next_triangle()
                        .expect("non-null types are sampled quickly")
                })
                .collect::<Vec<_>>()
        })
        .collect()
}
