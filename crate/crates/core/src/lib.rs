//! Braid words, the Dehornoy order, fractional Dehn twist coefficients, the
//! classification of 3-braids, and checkable certificates for the L-space
//! and left-orderability status of manifolds built from braids.
//!
//! ```
//! use braidcert::braid::BraidWord;
//! use braidcert::dehornoy::dehornoy_floor;
//! use braidcert::fdtc::fdtc_exact_b3;
//! use braidcert::rational::int;
//!
//! let b: BraidWord = "3: 1 2 1 1 2 1".parse().unwrap();
//! assert_eq!(dehornoy_floor(&b).unwrap(), 1);
//! assert_eq!(fdtc_exact_b3(&b).unwrap(), int(1));
//! ```
//!
//! The guide in `book/` walks through each module.

pub mod braid;
pub mod certify;
pub mod dehornoy;
pub mod error;
pub mod fdtc;
pub mod rational;
pub mod threebraid;

// The guide's snippets run as doc-tests.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $file:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            mod $name {}
        };
    }

    chapter!(introduction, "introduction.md");
    chapter!(braid_words, "braid-words.md");
    chapter!(dehornoy_order, "dehornoy-order.md");
    chapter!(fdtc, "fdtc.md");
    chapter!(three_braids, "three-braids.md");
    chapter!(certificates, "certificates.md");
    chapter!(cli, "cli.md");
}
