//! Deliberately broken kernels for mutation testing of `verify`.

use bt_cohomology::cohomology::Kernels;
use bt_cohomology::harish_chandra::{pieri_induce, BipartitionMultiset, CharacterKernels};
use bt_cohomology::partitions::{Bipartition, Partition};
use bt_cohomology::weyl::{chi_sym, chi_typeb, SymClass, TypeBClass};
use bt_cohomology::Result;
use clap::ValueEnum;
use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Pieri rule forgets its last constituent.
    Pieri,
    /// Murnaghan–Nakayama values are wrong on long cycles.
    Mn,
}

fn lossy_pieri(b: &Bipartition, s: usize) -> BipartitionMultiset {
    let mut m = pieri_induce(b, s);
    if let Some(k) = m.keys().last().cloned() {
        m.remove(&k);
    }
    m
}

fn bad_sym(label: &Partition, class: &SymClass) -> Result<BigInt> {
    let v: BigInt = chi_sym(label, class)?;
    Ok(if class.0.len() == 1 && class.0.size() >= 2 {
        -v
    } else {
        v
    })
}

fn bad_typeb(label: &Bipartition, class: &TypeBClass) -> Result<BigInt> {
    let v: BigInt = chi_typeb(label, class)?;
    let long_negative = class.0.first.is_empty() && class.0.second.len() == 1;
    Ok(if long_negative && class.0.size() >= 2 {
        -v
    } else {
        v
    })
}

pub fn kernels(fault: Option<Fault>) -> Kernels {
    match fault {
        None => Kernels::default(),
        Some(Fault::Pieri) => Kernels {
            pieri_induce: lossy_pieri,
            ..Kernels::default()
        },
        Some(Fault::Mn) => Kernels {
            characters: CharacterKernels {
                chi_sym: bad_sym,
                chi_typeb: bad_typeb,
            },
            ..Kernels::default()
        },
    }
}
