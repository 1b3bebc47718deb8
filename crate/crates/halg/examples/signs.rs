//! Koszul signs of shuffles and the suspension dictionary on a small map.

use halg::graded::perm::{enumerate_shuffles, koszul_sign};
use halg::graded::scalar::{self, int};
use halg::graded::suspension::{desuspend_map, suspend_map};
use halg::graded::{BasisIndex, GradedSpace, MultiMap};

fn main() -> halg::Result<()> {
    let degrees = [1, 0, 1];
    for sigma in enumerate_shuffles(1, 2) {
        println!("{sigma}: sign {:+}, koszul {:+}", sigma.sign(), koszul_sign(&sigma, &degrees)?);
    }

    let v = GradedSpace::new("V", [(0, 1), (1, 1)])?;
    let (x, h) = (BasisIndex::new(0, 0), BasisIndex::new(1, 0));
    let mut l2 = MultiMap::new(&v, &v, 2, 0)?;
    l2.add_entry(&[x, h], h, int(1))?;
    l2.add_entry(&[h, x], h, int(-1))?;
    let s = suspend_map(&l2)?;
    for (inputs, value) in s.entries() {
        let shown: Vec<String> = value.iter().map(|(b, c)| format!("{} {b}", scalar::format(c))).collect();
        println!("s l2 s^-1 on {:?} = {}", inputs.iter().map(|b| b.to_string()).collect::<Vec<_>>(), shown.join(" + "));
    }
    assert_eq!(desuspend_map(&s)?, l2);
    Ok(())
}
