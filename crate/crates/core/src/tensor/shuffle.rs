use std::collections::BTreeMap;

use super::Word;

/// Shuffle product of two words: every interleaving that preserves the
/// internal order of `u` and of `v`, counted with multiplicity.
pub fn shuffle(u: &Word, v: &Word) -> BTreeMap<Word, u64> {
    let mut out = BTreeMap::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    interleave(u.letters(), v.letters(), &mut buf, &mut out);
    out
}

fn interleave(u: &[u16], v: &[u16], buf: &mut Vec<u16>, out: &mut BTreeMap<Word, u64>) {
    if u.is_empty() || v.is_empty() {
        let mut w = buf.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        *out.entry(Word::new(w)).or_insert(0) += 1;
        return;
    }
    buf.push(u[0]);
    interleave(&u[1..], v, buf, out);
    buf.pop();
    buf.push(v[0]);
    interleave(u, &v[1..], buf, out);
    buf.pop();
}
