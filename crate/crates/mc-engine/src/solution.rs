//! Validated Maurer-Cartan solutions and obstruction reports.

use dgla_core::DglaOverArtin;
use exact_core::{ExactScalar, Monomial, SeriesElement};

use crate::error::McError;

/// Truncates every component series to orders <= k.
pub fn truncate_element(v: &[SeriesElement], k: u32) -> Vec<SeriesElement> {
    v.iter().map(|s| s.truncate_order(k)).collect()
}

/// The order-k slice of an element.
pub fn order_part(v: &[SeriesElement], k: u32) -> Vec<SeriesElement> {
    v.iter().map(|s| s.order_part(k)).collect()
}

/// A degree-1 element satisfying the Maurer-Cartan equation up to a stated
/// truncation order.
#[derive(Clone, Debug)]
pub struct McSolution {
    ambient: DglaOverArtin,
    element: Vec<SeriesElement>,
    order: u32,
}

impl McSolution {
    /// Validates degree, ideal membership, truncation, and the residual up to
    /// `order` before accepting the element.
    pub fn new(
        ambient: DglaOverArtin,
        element: Vec<SeriesElement>,
        order: u32,
    ) -> Result<Self, McError> {
        if !ambient.is_homogeneous(&element, 1) {
            return Err(McError::Degree {
                detail: "a Maurer-Cartan element must be homogeneous of degree 1".into(),
            });
        }
        if !ambient.in_maximal_ideal(&element) {
            return Err(McError::NotInIdeal {
                detail: "a Maurer-Cartan element must have no constant term".into(),
            });
        }
        let truncated = truncate_element(&element, order);
        if truncated != element {
            return Err(McError::BadSeed {
                detail: format!("element carries terms beyond its stated order {order}"),
            });
        }
        let residual = truncate_element(&ambient.mc_residual(&element), order);
        if !ambient.is_zero(&residual) {
            return Err(McError::NotMaurerCartan {
                residual: ambient.format_element(&residual),
            });
        }
        Ok(McSolution { ambient, element, order })
    }

    /// The ambient tensor DGLA.
    pub fn ambient(&self) -> &DglaOverArtin {
        &self.ambient
    }

    /// The solution element.
    pub fn element(&self) -> &[SeriesElement] {
        &self.element
    }

    /// The order up to which the residual vanishes.
    pub fn order(&self) -> u32 {
        self.order
    }
}

/// Failure record for an order-(k+1) extension attempt: the obstruction
/// cochain and its cohomology class, split by ideal monomial.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    /// The order at which extension failed.
    pub order: u32,
    /// The order-`order` slice of the residual, a degree-2 element.
    pub cochain: Vec<SeriesElement>,
    /// Per nonzero monomial slice: the class coordinates of the cochain in
    /// the cohomology of the matching shifted degree (2 minus the monomial's
    /// internal degree). Extension fails exactly when some class is nonzero.
    pub classes: Vec<(Monomial, Vec<ExactScalar>)>,
}

impl ObstructionReport {
    /// True when some monomial slice has a nonzero cohomology class.
    pub fn class_is_nonzero(&self) -> bool {
        self.classes
            .iter()
            .any(|(_, coords)| coords.iter().any(|c| !c.is_zero()))
    }
}
