//! Signature reduction shared by every crystal in the crate.
//!
//! A word in `+` (addable) and `-` (removable) letters is reduced by deleting
//! adjacent `-+` factors until the word reads `+^p -^q`. Raising operators act
//! on the leftmost surviving `-`, lowering operators on the rightmost `+`.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// The reduced word `+^p -^q`, keeping the payload attached to each letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced<T> {
    pub plus: Vec<T>,
    pub minus: Vec<T>,
}

impl<T> Reduced<T> {
    /// The letter acted on by `f`.
    pub fn lowering(&self) -> Option<&T> {
        self.plus.last()
    }

    /// The letter acted on by `e`.
    pub fn raising(&self) -> Option<&T> {
        self.minus.first()
    }
}

/// Single left-to-right stack pass.
pub fn reduce_signature<T, I>(word: I) -> Reduced<T>
where
    I: IntoIterator<Item = (Sign, T)>,
{
    let mut plus = Vec::new();
    let mut minus: Vec<T> = Vec::new();
    for (sign, item) in word {
        match sign {
            Sign::Minus => minus.push(item),
            Sign::Plus => {
                if minus.pop().is_none() {
                    plus.push(item);
                }
            }
        }
    }
    Reduced { plus, minus }
}
