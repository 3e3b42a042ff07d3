#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "plumbd/errors.hpp"
#include "plumbd/graph.hpp"
#include "plumbd/linalg.hpp"
#include "plumbd/rational.hpp"

namespace plumbd {

// Re-checkable definiteness certificate: M = L * diag(pivots) * L^T exactly,
// and the verdict is read off the pivot signs alone.
struct DefinitenessCertificate {
    IntMat matrix;
    RatVec pivots;
    RatMat unit_lower;
    bool complete = false;           // false: elimination stalled on a zero pivot
    bool negative_definite = false;  // complete and every pivot < 0

    bool has_zero_pivot() const {
        for (const auto& p : pivots)
            if (p == 0) return true;
        return false;
    }

    // Multiplies the factors back together and compares with the input.
    bool recheck() const {
        if (!complete) return false;
        return ldl_reconstruct({unit_lower, pivots, true}) == to_rat(matrix);
    }
};

inline DefinitenessCertificate check_negative_definite(const IntMat& m) {
    if (!m.is_symmetric()) throw PreconditionError("definiteness check requires a symmetric matrix");
    LdlResult ldl = ldl_decompose(m);
    DefinitenessCertificate cert;
    cert.matrix = m;
    cert.pivots = ldl.pivots;
    cert.unit_lower = std::move(ldl.unit_lower);
    cert.complete = ldl.complete;
    cert.negative_definite = ldl.complete;
    for (const auto& p : cert.pivots)
        if (p >= 0) cert.negative_definite = false;
    return cert;
}

// The plumbing matrix together with everything computed exactly once:
// determinant, rational inverse, and the LDL definiteness certificate.
class PlumbingMatrix {
public:
    static PlumbingMatrix from_graph(const PlumbingGraph& g) {
        ValidationReport report = validate_graph(g);
        if (!report.ok()) throw ValidationError("invalid plumbing graph: " + report.describe());
        const std::size_t s = g.size();
        IntMat m(s, s);
        std::map<long, std::size_t> index;
        std::vector<long> ids;
        ids.reserve(s);
        for (std::size_t i = 0; i < s; ++i) {
            m(i, i) = g.vertices[i].weight;
            index[g.vertices[i].id] = i;
            ids.push_back(g.vertices[i].id);
        }
        for (const auto& [a, b] : g.edges) {
            std::size_t i = index.at(a), j = index.at(b);
            m(i, j) = 1;
            m(j, i) = 1;
        }
        return PlumbingMatrix(std::move(m), std::move(ids));
    }

    // Direct construction from a symmetric integer matrix (vertex ids 1..s).
    static PlumbingMatrix from_entries(IntMat m) {
        if (!m.is_symmetric()) throw PreconditionError("plumbing matrix must be symmetric");
        std::vector<long> ids(m.rows());
        std::iota(ids.begin(), ids.end(), 1L);
        return PlumbingMatrix(std::move(m), std::move(ids));
    }

    std::size_t size() const { return m_.rows(); }
    const IntMat& entries() const { return m_; }
    const Int& det() const { return det_; }
    const RatMat& inverse() const { return inverse_; }
    const DefinitenessCertificate& certificate() const { return cert_; }
    bool negative_definite() const { return cert_.negative_definite; }
    const std::vector<long>& vertex_ids() const { return ids_; }

    // Diagonal of M: the weight vector, which is also the base point of Char.
    const IntVec& weights() const { return weights_; }

    std::size_t index_of(long vertex_id) const {
        auto it = index_.find(vertex_id);
        if (it == index_.end())
            throw UnknownVertexError("unknown vertex id " + std::to_string(vertex_id));
        return it->second;
    }

    // x^T M x, using the sparsity of M.
    Int quad_form(const IntVec& x) const {
        if (x.size() != size()) throw DimensionMismatchError("vector length != vertex count");
        Int acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) acc += weights_[i] * x[i] * x[i];
        for (const auto& [i, j] : offdiag_) acc += 2 * m_(i, j) * x[i] * x[j];
        return acc;
    }

    IntVec apply(const IntVec& x) const {
        if (x.size() != size()) throw DimensionMismatchError("vector length != vertex count");
        return mat_vec(m_, x);
    }

    RatVec apply_inverse(const IntVec& x) const {
        if (x.size() != size()) throw DimensionMismatchError("vector length != vertex count");
        return mat_vec(inverse_, x);
    }

private:
    PlumbingMatrix(IntMat m, std::vector<long> ids) : m_(std::move(m)), ids_(std::move(ids)) {
        const std::size_t s = m_.rows();
        det_ = det_bareiss(m_);
        if (det_ == 0)
            throw SingularMatrixError("plumbing matrix is singular (not a rational homology sphere)");
        inverse_ = *rational_inverse(m_);
        cert_ = check_negative_definite(m_);
        weights_.reserve(s);
        for (std::size_t i = 0; i < s; ++i) weights_.push_back(m_(i, i));
        for (std::size_t i = 0; i < s; ++i) {
            index_[ids_[i]] = i;
            for (std::size_t j = i + 1; j < s; ++j)
                if (m_(i, j) != 0) offdiag_.emplace_back(i, j);
        }
    }

    IntMat m_;
    Int det_;
    RatMat inverse_;
    DefinitenessCertificate cert_;
    std::vector<long> ids_;
    IntVec weights_;
    std::map<long, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> offdiag_;
};

inline PlumbingMatrix build_matrix(const PlumbingGraph& g) { return PlumbingMatrix::from_graph(g); }

// Invariants of the trace cobordism W, forced by the handle description:
// chi(W) = s and sigma(W) = -s once M is negative definite.
struct TopologyInvariants {
    std::size_t s;
    Int det;
    Int h1_order;
    long chi_w;
    long sigma_w;
};

inline TopologyInvariants topology_invariants(const PlumbingMatrix& m) {
    if (!m.negative_definite())
        throw NotNegativeDefiniteError("topology invariants require a negative definite matrix");
    TopologyInvariants t;
    t.s = m.size();
    t.det = m.det();
    t.h1_order = abs(m.det());
    t.chi_w = static_cast<long>(t.s);
    t.sigma_w = -static_cast<long>(t.s);
    return t;
}

}  // namespace plumbd
