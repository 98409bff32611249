use num_bigint::BigUint;
use schroder_core::enumeration::{bell_numbers, count_blocks, count_uhfree_with_peaks, large_schroder, narayana};
use schroder_core::partition::generate_partitions;
use schroder_core::path::generate_paths;
use schroder_core::{PathClass, Pattern};

/// Bell numbers from the Stirling recurrence, independent of the triangle used by the library.
fn stirling_bell(n: usize) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for m in 1..=n {
        row = (0..=m)
            .map(|k| match k {
                0 => BigUint::default(),
                _ => row[k - 1].clone() + BigUint::from(k) * row.get(k).cloned().unwrap_or_default(),
            })
            .collect();
    }
    row.iter().sum()
}

#[test]
fn bell_numbers_match_generation() {
    let bell = bell_numbers(10);
    for (n, b) in bell.iter().enumerate() {
        assert_eq!(*b, stirling_bell(n), "n={n}");
        assert_eq!(BigUint::from(generate_partitions(n).unwrap().count()), *b, "n={n}");
    }
}

#[test]
fn dyck_peaks_are_narayana() {
    for n in 1..=8u64 {
        let mut by_peaks = vec![0u64; n as usize + 1];
        for p in generate_paths(n as usize, PathClass::Dyck).unwrap() {
            by_peaks[p.peak_count()] += 1;
        }
        for k in 1..=n {
            assert_eq!(narayana(n, k), BigUint::from(by_peaks[k as usize]), "n={n} k={k}");
        }
    }
}

#[test]
fn refined_counts_match_brute_force() {
    for n in 1..=8u64 {
        let mut blocks = [[0u64; 10]; 2];
        for pi in generate_partitions(n as usize).unwrap() {
            for (i, pat) in Pattern::ALL.iter().enumerate() {
                if pat.avoided_by(&pi) {
                    blocks[i][pi.block_count()] += 1;
                }
            }
        }
        let mut peaks = [0u64; 10];
        for p in generate_paths(n as usize, PathClass::UhFree).unwrap() {
            peaks[p.peak_count()] += 1;
        }
        // count_blocks is indexed by one less element and one less block
        for k in 1..=n {
            let expected = count_blocks(n - 1, k - 1);
            assert_eq!(expected, BigUint::from(blocks[0][k as usize]), "12312 n={n} k={k}");
            assert_eq!(expected, BigUint::from(blocks[1][k as usize]), "12321 n={n} k={k}");
        }
        for k in 0..=n {
            assert_eq!(count_uhfree_with_peaks(n, k), BigUint::from(peaks[k as usize]), "paths n={n} k={k}");
        }
    }
}

#[test]
fn large_schroder_matches_generation() {
    for n in 0..=7 {
        assert_eq!(large_schroder(n), BigUint::from(generate_paths(n, PathClass::Schroder).unwrap().count()));
    }
}
