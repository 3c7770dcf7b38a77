mod common;

use std::collections::{BTreeMap, HashMap};
use std::fs;

use codim3::datastore::{human_from_machine, load_database, ClassKey, HUMAN_INDEX, MACHINE_INDEX};
use codim3::poly::{human_list, random_homogeneous};
use codim3::report::{grid_report, predominant_classes};
use codim3::tor::TorClass;
use codim3::Polynomial;
use common::gf3;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CLASSES: [TorClass; 5] = [TorClass::B, TorClass::C, TorClass::G, TorClass::H, TorClass::T];

fn random_key(rng: &mut ChaCha8Rng) -> ClassKey {
    ClassKey {
        m: rng.gen_range(5..7),
        n: rng.gen_range(2..4),
        class: CLASSES[rng.gen_range(0..5)],
        p: rng.gen_range(0..3),
        q: rng.gen_range(0..2),
        r: rng.gen_range(0..3),
    }
}

fn random_gens(rng: &mut ChaCha8Rng) -> Vec<Polynomial<codim3::PrimeField>> {
    (0..rng.gen_range(1..4))
        .map(|_| {
            let d = rng.gen_range(1..4);
            random_homogeneous(gf3(), d, rng.gen_range(0..3), rng).unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(common::cases(24))]

    #[test]
    fn records_survive_reload(seed: u64, steps in 1usize..25) {
        let dir = tempfile::tempdir().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut db = load_database(dir.path()).unwrap();
        let mut shortest: HashMap<(ClassKey, u8), usize> = HashMap::new();
        for _ in 0..steps {
            let key = random_key(&mut rng);
            let bucket = rng.gen_range(0..5u8);
            let gens = random_gens(&mut rng);
            let len = human_list(&gens).len();
            db.record(key, &gens, bucket).unwrap();
            let best = shortest.entry((key, bucket)).or_insert(len);
            *best = (*best).min(len);
            prop_assert_eq!(&load_database(dir.path()).unwrap(), &db);
        }

        for ((key, bucket), entry) in db.entries() {
            prop_assert_eq!(entry.human_generators().len(), shortest[&(*key, *bucket)]);
            let text = fs::read_to_string(db.class_file(key, *bucket)).unwrap();
            let lens: Vec<usize> = text.lines().map(|l| human_from_machine(l).len()).collect();
            prop_assert!(lens.windows(2).all(|w| w[0] > w[1]), "{:?}", lens);
        }
        for index in [MACHINE_INDEX, HUMAN_INDEX] {
            let text = fs::read_to_string(dir.path().join("data").join(index)).unwrap();
            prop_assert_eq!(text.lines().count(), db.len());
        }

        let totals = db.entries().iter().fold(BTreeMap::new(), |mut acc, ((k, _), e)| {
            *acc.entry((k.m, k.n)).or_insert(0u64) += e.count;
            acc
        });
        for ((m, n), total) in totals {
            let (h, bgt) = grid_report(&db, m, n, None);
            let c3: u64 = db
                .entries()
                .iter()
                .filter(|((k, _), _)| k.m == m && k.n == n && k.class == TorClass::C)
                .map(|(_, e)| e.count)
                .sum();
            prop_assert_eq!(h.total() + bgt.total() + c3, total);
        }
    }

    #[test]
    fn predominance_is_scale_invariant(
        counts in proptest::collection::vec(1u64..1000, 1..6), scale in 1u64..50, factor in 1u64..10
    ) {
        let keys: Vec<ClassKey> = counts
            .iter()
            .enumerate()
            .map(|(i, _)| ClassKey { m: 5, n: 2, class: TorClass::H, p: i, q: 0, r: 0 })
            .collect();
        let base: BTreeMap<ClassKey, u64> = keys.iter().copied().zip(counts.iter().copied()).collect();
        let scaled: BTreeMap<ClassKey, u64> = base.iter().map(|(k, c)| (*k, c * scale)).collect();
        prop_assert_eq!(predominant_classes(&base, factor).unwrap(), predominant_classes(&scaled, factor).unwrap());
    }
}
