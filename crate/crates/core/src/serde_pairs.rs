//! Serialises `BTreeMap<(usize, usize), usize>` as a list of
//! `{ "d1", "d2", "count" }` objects, since JSON keys must be strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
struct Bucket {
    d1: usize,
    d2: usize,
    count: usize,
}

pub fn serialize<S: Serializer>(
    map: &BTreeMap<(usize, usize), usize>,
    s: S,
) -> Result<S::Ok, S::Error> {
    let buckets: Vec<Bucket> = map
        .iter()
        .map(|(&(d1, d2), &count)| Bucket { d1, d2, count })
        .collect();
    buckets.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(
    d: D,
) -> Result<BTreeMap<(usize, usize), usize>, D::Error> {
    let buckets = Vec::<Bucket>::deserialize(d)?;
    Ok(buckets
        .into_iter()
        .map(|b| ((b.d1, b.d2), b.count))
        .collect())
}
