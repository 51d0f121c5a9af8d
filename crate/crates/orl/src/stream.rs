//! Deterministic seed derivation. A single run seed fans out into named
//! substreams so that independent subsystems draw from independent
//! generators while the whole run stays reproducible.

/// Derive a child seed from `(seed, tag, index)` by FNV-1a hashing. Equal
/// arguments give equal results on every platform; distinct tags give
/// unrelated streams.
pub fn substream(seed: u64, tag: &str, index: u64) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    for byte in seed
        .to_le_bytes()
        .iter()
        .chain(tag.as_bytes())
        .chain(index.to_le_bytes().iter())
    {
        h ^= u64::from(*byte);
        h = h.wrapping_mul(PRIME);
    }
    h
}
