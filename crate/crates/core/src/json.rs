use num_bigint::BigInt;
use serde::ser::Error as _;
use serde::{Serialize, Serializer};

use crate::symfunc::Partition;

/// Writes an integer of any size as a bare JSON number.
pub(crate) fn bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    let n: serde_json::Number = x.to_string().parse().map_err(S::Error::custom)?;
    n.serialize(s)
}

#[derive(Serialize)]
pub(crate) struct Term<'a> {
    pub partition: &'a Partition,
    #[serde(serialize_with = "bigint")]
    pub coeff: &'a BigInt,
}

pub(crate) fn terms<'a>(it: impl Iterator<Item = (&'a Partition, &'a BigInt)>) -> Vec<Term<'a>> {
    it.map(|(partition, coeff)| Term { partition, coeff })
        .collect()
}
