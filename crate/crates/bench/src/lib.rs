//! Shared fixtures for the criterion benchmarks.

use melzak_core::{GeneralizedInstance, InstanceSampler, MelzakInstance};

/// Seeded instances so benchmark inputs are identical across runs.
pub fn melzak_instances(count: usize, max_n: u32) -> Vec<MelzakInstance> {
    let mut sampler = InstanceSampler::new(0xBE9C, 9);
    (0..count)
        .map(|_| sampler.melzak_instance(max_n).expect("sampling"))
        .collect()
}

pub fn generalized_instances(count: usize, max_n: u32, max_j: u32) -> Vec<GeneralizedInstance> {
    let mut sampler = InstanceSampler::new(0xBE9C, 9);
    (0..count)
        .map(|_| {
            sampler
                .generalized_instance(max_n, max_j)
                .expect("sampling")
        })
        .collect()
}
