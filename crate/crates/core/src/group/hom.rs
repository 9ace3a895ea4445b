use std::sync::Arc;

use super::{Elem, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// An injective group homomorphism `phi: F -> G`, stored element-wise.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<Elem>,
}

impl GroupHom {
    /// Validates that `images` defines an injective homomorphism. Error
    /// messages name the first failing pair.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<Elem>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "expected {} images, got {}",
                source.order(),
                images.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.order()) {
            return Err(Error::InvalidHom(format!("image {bad} is not an element of the target")));
        }
        if images[0] != 0 {
            return Err(Error::InvalidHom("identity is not mapped to the identity".into()));
        }
        for x in source.elements() {
            for y in source.elements() {
                if images[source.mul(x, y)] != target.mul(images[x], images[y]) {
                    return Err(Error::InvalidHom(format!(
                        "phi({x}*{y}) != phi({x})*phi({y})"
                    )));
                }
            }
        }
        let mut preimage = vec![None; target.order()];
        for x in source.elements() {
            if let Some(prev) = preimage[images[x]] {
                return Err(Error::InvalidHom(format!(
                    "not injective: elements {prev} and {x} both map to {}",
                    images[x]
                )));
            }
            preimage[images[x]] = Some(x);
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let images = group.elements().collect();
        GroupHom { source: group.clone(), target: group, images }
    }

    /// Inclusion of a subgroup, with the subgroup realized via
    /// [`Subgroup::as_group`].
    pub fn inclusion(sub: &Subgroup) -> Self {
        GroupHom {
            source: Arc::new(sub.as_group()),
            target: sub.parent().clone(),
            images: sub.elements().to_vec(),
        }
    }

    /// Matches permutations of two permutation groups of the same degree.
    pub fn by_permutations(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>) -> Result<Self> {
        let (Some(sp), Some(tp)) = (source.permutations(), target.permutations()) else {
            return Err(Error::InvalidHom("both groups must be permutation groups".into()));
        };
        let images = sp
            .iter()
            .map(|p| {
                tp.iter()
                    .position(|q| q == p)
                    .ok_or_else(|| Error::InvalidHom(format!("{p} is not an element of the target")))
            })
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x]
    }

    /// Whether `phi` is the identity map of a single group.
    pub fn is_identity(&self) -> bool {
        Arc::ptr_eq(&self.source, &self.target) || (*self.source == *self.target && self.images.iter().enumerate().all(|(i, &j)| i == j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_named;

    #[test]
    fn validation() {
        let s3 = Arc::new(make_named("symmetric", 3).unwrap());
        let c2 = Arc::new(make_named("cyclic", 2).unwrap());
        let t = s3.parse_element("(1,2)").unwrap();
        assert!(GroupHom::new(c2.clone(), s3.clone(), vec![0, t]).is_ok());
        // (1,2,3) has order 3, so this is not a homomorphism
        assert!(GroupHom::new(c2.clone(), s3.clone(), vec![0, 2]).is_err());
        let c4 = Arc::new(make_named("cyclic", 4).unwrap());
        let err = GroupHom::new(c4, c2, vec![0, 1, 0, 1]).unwrap_err();
        assert!(err.to_string().contains("not injective"), "{err}");
        assert!(GroupHom::identity(s3).is_identity());
    }
}
