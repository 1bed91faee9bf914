use super::DualNumber;
use crate::error::{Error, Result};

/// One finite end of an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalBound {
    Closed(DualNumber),
    Open(DualNumber),
}

impl IntervalBound {
    pub fn value(self) -> DualNumber {
        match self {
            Self::Closed(v) | Self::Open(v) => v,
        }
    }

    fn is_open(self) -> bool {
        matches!(self, Self::Open(_))
    }
}

/// An interval of dual numbers under the lexicographic order.
///
/// A missing bound stands for `-∞` (lower) or `+∞` (upper). Intervals only
/// support membership tests; they are not arithmetic objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualInterval {
    lower: Option<IntervalBound>,
    upper: Option<IntervalBound>,
}

impl DualInterval {
    /// Requires `lower ≤ upper`, strictly when either end is open.
    pub fn new(lower: Option<IntervalBound>, upper: Option<IntervalBound>) -> Result<Self> {
        if let (Some(lo), Some(hi)) = (lower, upper) {
            let ordered = if lo.is_open() || hi.is_open() {
                lo.value() < hi.value()
            } else {
                lo.value() <= hi.value()
            };
            if !ordered {
                return Err(Error::InvalidInterval);
            }
        }
        Ok(Self { lower, upper })
    }

    /// `[p, q]`
    pub fn closed(p: DualNumber, q: DualNumber) -> Result<Self> {
        Self::new(Some(IntervalBound::Closed(p)), Some(IntervalBound::Closed(q)))
    }

    /// `(p, q)`
    pub fn open(p: DualNumber, q: DualNumber) -> Result<Self> {
        Self::new(Some(IntervalBound::Open(p)), Some(IntervalBound::Open(q)))
    }

    /// `[p, q)`
    pub fn closed_open(p: DualNumber, q: DualNumber) -> Result<Self> {
        Self::new(Some(IntervalBound::Closed(p)), Some(IntervalBound::Open(q)))
    }

    /// `(p, q]`
    pub fn open_closed(p: DualNumber, q: DualNumber) -> Result<Self> {
        Self::new(Some(IntervalBound::Open(p)), Some(IntervalBound::Closed(q)))
    }

    /// `[p, +∞)`
    pub fn at_least(p: DualNumber) -> Self {
        Self { lower: Some(IntervalBound::Closed(p)), upper: None }
    }

    /// `(p, +∞)`
    pub fn greater_than(p: DualNumber) -> Self {
        Self { lower: Some(IntervalBound::Open(p)), upper: None }
    }

    /// `(-∞, q]`
    pub fn at_most(q: DualNumber) -> Self {
        Self { lower: None, upper: Some(IntervalBound::Closed(q)) }
    }

    /// `(-∞, q)`
    pub fn less_than(q: DualNumber) -> Self {
        Self { lower: None, upper: Some(IntervalBound::Open(q)) }
    }

    pub fn lower(&self) -> Option<IntervalBound> {
        self.lower
    }

    pub fn upper(&self) -> Option<IntervalBound> {
        self.upper
    }

    pub fn contains(&self, u: DualNumber) -> bool {
        let above = match self.lower {
            None => true,
            Some(IntervalBound::Closed(p)) => p <= u,
            Some(IntervalBound::Open(p)) => p < u,
        };
        let below = match self.upper {
            None => true,
            Some(IntervalBound::Closed(q)) => u <= q,
            Some(IntervalBound::Open(q)) => u < q,
        };
        above && below
    }
}
