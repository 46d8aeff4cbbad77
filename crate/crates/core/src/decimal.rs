//! Serde adapters rendering big integers as decimal strings.

use std::fmt::Display;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
where
    T: FromStr,
    T::Err: Display,
    D: Deserializer<'de>,
{
    let text = String::deserialize(d)?;
    text.parse().map_err(D::Error::custom)
}

pub mod option {
    use super::*;

    pub fn serialize<T: Display, S: Serializer>(value: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<Option<T>, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        match Option::<String>::deserialize(d)? {
            Some(text) => text.parse().map(Some).map_err(D::Error::custom),
            None => Ok(None),
        }
    }
}

pub mod triple {
    use serde::ser::SerializeTuple;

    use super::*;

    pub fn serialize<T: Display, S: Serializer>(value: &[T; 3], s: S) -> Result<S::Ok, S::Error> {
        let mut tuple = s.serialize_tuple(3)?;
        for item in value {
            tuple.serialize_element(&item.to_string())?;
        }
        tuple.end()
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<[T; 3], D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let [a, b, c] = <[String; 3]>::deserialize(d)?;
        let parse = |text: String| text.parse::<T>().map_err(D::Error::custom);
        Ok([parse(a)?, parse(b)?, parse(c)?])
    }
}
