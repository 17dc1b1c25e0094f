//! Recognising ideals that have a closed form.

use crate::polymatroid::VeroneseSpec;
use crate::transversal::{self, TransversalPresentation};
use crate::veronese::{self, NormalizedVeronese};
use crate::{Limits, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForm {
    Veronese(NormalizedVeronese),
    Transversal(TransversalPresentation),
}

/// Veronese type is tried first; an ideal in both families (a power of a
/// prime, a principal ideal) is reported as Veronese.
pub fn identify(ideal: &MonomialIdeal, limits: &Limits) -> Option<ClosedForm> {
    if let Some(spec) = VeroneseSpec::detect(ideal) {
        return Some(ClosedForm::Veronese(veronese::normalize(&spec)));
    }
    transversal::recover_presentation(ideal, limits)
        .ok()
        .map(ClosedForm::Transversal)
}

/// `dstab(I)` when a closed form is known.
pub fn dstab_closed_form(ideal: &MonomialIdeal, limits: &Limits) -> Option<u32> {
    Some(match identify(ideal, limits)? {
        ClosedForm::Veronese(v) => veronese::dstab_veronese(&v),
        ClosedForm::Transversal(p) => transversal::dstab_transversal(&p),
    })
}
