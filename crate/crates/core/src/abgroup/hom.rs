use super::matrix::{smith_normal_form, IntMatrix};
use super::{AbGroupError, AbelianGroup, GroupElement, Subgroup};

/// Homomorphism of finite abelian groups. Column `i` of the matrix is the
/// image of the `i`-th source generator; row `j` is reduced mod the `j`-th
/// target invariant factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    source: AbelianGroup,
    target: AbelianGroup,
    matrix: IntMatrix,
}

impl Homomorphism {
    pub fn new(
        source: &AbelianGroup,
        target: &AbelianGroup,
        matrix: IntMatrix,
    ) -> Result<Self, AbGroupError> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(AbGroupError::ShapeMismatch {
                rows: matrix.rows(),
                cols: matrix.cols(),
                target_rank: target.ngens(),
                source_rank: source.ngens(),
            });
        }
        let mut m = matrix;
        for (j, &d) in target.invariant_factors().iter().enumerate() {
            for i in 0..m.cols() {
                m[(j, i)] = m[(j, i)].rem_euclid(d);
            }
        }
        for (i, &order) in source.invariant_factors().iter().enumerate() {
            if !target.is_identity(&target.scale(order, &m.column(i))) {
                return Err(AbGroupError::NotAHomomorphism { column: i, order });
            }
        }
        Ok(Homomorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: m,
        })
    }

    /// Builds the map sending the `i`-th source generator to `images[i]`.
    pub fn from_images(
        source: &AbelianGroup,
        target: &AbelianGroup,
        images: &[GroupElement],
    ) -> Result<Self, AbGroupError> {
        let mut m = IntMatrix::zeros(target.ngens(), source.ngens());
        if images.len() != source.ngens() {
            return Err(AbGroupError::ArityMismatch {
                expected: source.ngens(),
                got: images.len(),
            });
        }
        for (i, img) in images.iter().enumerate() {
            target.check(img)?;
            for (j, &c) in img.iter().enumerate() {
                m[(j, i)] = c;
            }
        }
        Self::new(source, target, m)
    }

    pub fn zero(source: &AbelianGroup, target: &AbelianGroup) -> Self {
        Homomorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.ngens(), source.ngens()),
        }
    }

    pub fn identity(a: &AbelianGroup) -> Self {
        Self::scalar(a, 1)
    }

    /// Multiplication by `k` (the `k`-th power map, written additively).
    pub fn scalar(a: &AbelianGroup, k: i64) -> Self {
        let mut m = IntMatrix::identity(a.ngens());
        for (i, &d) in a.invariant_factors().iter().enumerate() {
            m[(i, i)] = k.rem_euclid(d);
        }
        Homomorphism {
            source: a.clone(),
            target: a.clone(),
            matrix: m,
        }
    }

    pub fn source(&self) -> &AbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &AbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[i64]) -> GroupElement {
        let y = self.matrix.apply(&self.source.normalize(x)).expect("entries are reduced");
        self.target.normalize(&y)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Homomorphism) -> Result<Homomorphism, AbGroupError> {
        assert_eq!(inner.target, self.source, "composition of incompatible maps");
        let m = self.matrix.checked_mul(&inner.matrix)?;
        Homomorphism::new(&inner.source, &self.target, m)
    }

    pub fn add(&self, other: &Homomorphism) -> Homomorphism {
        assert!(self.source == other.source && self.target == other.target);
        let mut m = self.matrix.clone();
        for j in 0..m.rows() {
            let d = self.target.invariant_factors()[j];
            for i in 0..m.cols() {
                m[(j, i)] = (m[(j, i)] + other.matrix[(j, i)]).rem_euclid(d);
            }
        }
        Homomorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: m,
        }
    }

    pub fn neg(&self) -> Homomorphism {
        let mut m = self.matrix.clone();
        for j in 0..m.rows() {
            let d = self.target.invariant_factors()[j];
            for i in 0..m.cols() {
                m[(j, i)] = (-m[(j, i)]).rem_euclid(d);
            }
        }
        Homomorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: m,
        }
    }

    pub fn sub(&self, other: &Homomorphism) -> Homomorphism {
        self.add(&other.neg())
    }

    /// `self` scaled by the integer `k` pointwise.
    pub fn times(&self, k: i64) -> Homomorphism {
        let mut out = Homomorphism::zero(&self.source, &self.target);
        for j in 0..self.matrix.rows() {
            let d = self.target.invariant_factors()[j] as i128;
            for i in 0..self.matrix.cols() {
                out.matrix[(j, i)] = (self.matrix[(j, i)] as i128 * k as i128).rem_euclid(d) as i64;
            }
        }
        out
    }

    /// n-th iterate of an endomorphism.
    pub fn pow(&self, n: u32) -> Result<Homomorphism, AbGroupError> {
        assert_eq!(self.source, self.target, "pow of a non-endomorphism");
        let mut acc = Homomorphism::identity(&self.source);
        for _ in 0..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Kernel, from the integer null space of `[M | diag(target)]`.
    pub fn kernel(&self) -> Result<Subgroup, AbGroupError> {
        let k = self.source.ngens();
        let l = self.target.ngens();
        if l == 0 {
            return Ok(Subgroup::whole(&self.source));
        }
        let mut aug = IntMatrix::zeros(l, k + l);
        for j in 0..l {
            for i in 0..k {
                aug[(j, i)] = self.matrix[(j, i)];
            }
            aug[(j, k + j)] = self.target.invariant_factors()[j];
        }
        let snf = smith_normal_form(&aug)?;
        let rank = snf.rank();
        let gens: Vec<GroupElement> = (rank..k + l)
            .map(|c| (0..k).map(|i| snf.v[(i, c)]).collect::<Vec<_>>())
            .map(|v| self.source.normalize(&v))
            .collect();
        Subgroup::generated(&self.source, &gens)
    }

    pub fn image(&self) -> Result<Subgroup, AbGroupError> {
        let gens: Vec<GroupElement> = (0..self.source.ngens()).map(|i| self.matrix.column(i)).collect();
        Subgroup::generated(&self.target, &gens)
    }

    pub fn is_injective(&self) -> Result<bool, AbGroupError> {
        Ok(self.kernel()?.is_trivial())
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, s: &Subgroup) -> Result<Subgroup, AbGroupError> {
        let gens: Vec<GroupElement> = s.generators().iter().map(|g| self.apply(g)).collect();
        Subgroup::generated(&self.target, &gens)
    }

    /// Preimage of a subgroup of the target.
    pub fn preimage(&self, s: &Subgroup) -> Result<Subgroup, AbGroupError> {
        let (_, proj) = s.quotient()?;
        proj.compose(self)?.kernel()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[i64]) -> AbelianGroup {
        AbelianGroup::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_homomorphism() {
        // C3 -> C9 sending 1 to 1 is not a homomorphism
        let r = Homomorphism::from_images(&g(&[3]), &g(&[9]), &[vec![1]]);
        assert!(matches!(r, Err(AbGroupError::NotAHomomorphism { .. })));
        assert!(Homomorphism::from_images(&g(&[3]), &g(&[9]), &[vec![3]]).is_ok());
    }

    #[test]
    fn kernel_examples() {
        let c9 = g(&[9]);
        let k = Homomorphism::scalar(&c9, 3).kernel().unwrap();
        assert_eq!(k.order(), 3);
        let a = g(&[3, 9]);
        let z = Homomorphism::zero(&a, &a).kernel().unwrap();
        assert_eq!(z.order(), 27);
        // plain projection (a1, a2) -> a2 only kills <a1>
        let proj = Homomorphism::from_images(&a, &c9, &[vec![0], vec![1]]).unwrap();
        assert_eq!(proj.kernel().unwrap().order(), 3);
        // (a1, a2) -> a2^3 kills <a1, a2^3>
        let h = Homomorphism::from_images(&a, &c9, &[vec![0], vec![3]]).unwrap();
        let k = h.kernel().unwrap();
        assert_eq!(k.order(), 9);
        assert_eq!(k, Subgroup::generated(&a, &[vec![1, 0], vec![0, 3]]).unwrap());
    }

    #[test]
    fn kernel_of_injection_into_trivial() {
        let a = g(&[5, 5]);
        let t = AbelianGroup::trivial();
        assert!(Homomorphism::zero(&a, &t).kernel().unwrap().is_whole());
        assert!(Homomorphism::zero(&t, &a).kernel().unwrap().is_whole());
    }

    #[test]
    fn preimage_and_image() {
        let a = g(&[3, 9]);
        let h = Homomorphism::scalar(&a, 3);
        let im = h.image().unwrap();
        assert_eq!(im.order(), 3);
        let pre = h.preimage(&a.trivial_subgroup()).unwrap();
        assert_eq!(pre, h.kernel().unwrap());
        assert_eq!(h.preimage(&im).unwrap().order(), 27);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_group() -> impl Strategy<Value = AbelianGroup> {
            prop_oneof![
                Just(vec![]),
                Just(vec![3]),
                Just(vec![9]),
                Just(vec![3, 3]),
                Just(vec![3, 9]),
                Just(vec![3, 3, 3]),
                Just(vec![3, 27]),
                Just(vec![9, 9]),
                Just(vec![3, 3, 9]),
                Just(vec![3, 3, 3, 3]),
                Just(vec![3, 9, 27]),
            ]
            .prop_map(|v| AbelianGroup::new(v).unwrap())
        }

        /// Random homomorphism: arbitrary images scaled so every column
        /// respects its source order.
        fn random_hom(src: &AbelianGroup, tgt: &AbelianGroup, raw: &[i64]) -> Homomorphism {
            let mut images = Vec::new();
            for (i, &d) in src.invariant_factors().iter().enumerate() {
                let img: Vec<i64> = tgt
                    .invariant_factors()
                    .iter()
                    .enumerate()
                    .map(|(j, &e)| {
                        let c = raw[(i * 7 + j) % raw.len()];
                        let g = num_integer::gcd(d, e);
                        (c * (e / g)).rem_euclid(e)
                    })
                    .collect();
                images.push(img);
            }
            Homomorphism::from_images(src, tgt, &images).unwrap()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn kernel_image_orders(src in small_group(), tgt in small_group(), raw in proptest::collection::vec(0i64..100, 32)) {
                let h = random_hom(&src, &tgt, &raw);
                let ker = h.kernel().unwrap();
                let im = h.image().unwrap();
                let brute_ker: Vec<_> = src.elements().filter(|x| tgt.is_identity(&h.apply(x))).collect();
                prop_assert_eq!(ker.order(), brute_ker.len() as i64);
                for x in &brute_ker {
                    prop_assert!(ker.contains(x));
                }
                for g in ker.generators() {
                    prop_assert!(tgt.is_identity(&h.apply(&g)));
                }
                let brute_im: std::collections::HashSet<_> = src.elements().map(|x| h.apply(&x)).collect();
                prop_assert_eq!(im.order(), brute_im.len() as i64);
                prop_assert_eq!(ker.order() * im.order(), src.order());
            }
        }
    }
}
