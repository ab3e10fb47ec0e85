#ifndef REGJUMP_SIMPLICIAL_HPP
#define REGJUMP_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "regjump/field.hpp"
#include "regjump/rank.hpp"

namespace regjump {

/// Face of a simplicial complex as a vertex bitmask.
using FaceMask = std::uint32_t;

/// Downward-closed face set on a fixed vertex set. The void complex (no
/// faces at all) and the irrelevant complex ({} only) are distinct states.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int vertex_count);
    static SimplicialComplex irrelevant_complex(int vertex_count);
    /// Faces must include every subset of every face; throws
    /// validation_error otherwise.
    static SimplicialComplex from_faces(int vertex_count, std::vector<FaceMask> faces);
    /// Downward closure of the given generating faces.
    static SimplicialComplex closure_of(int vertex_count, const std::vector<FaceMask>& faces);

    int vertex_count() const { return vertex_count_; }
    bool is_void() const { return faces_.empty(); }
    bool is_irrelevant() const { return faces_.size() == 1 && faces_[0] == 0; }

    /// All faces (including the empty face if present), sorted by
    /// cardinality then numeric mask value.
    const std::vector<FaceMask>& faces() const { return faces_; }
    /// Faces with exactly k+1 vertices (dimension k); k = -1 selects the
    /// empty face.
    std::vector<FaceMask> faces_of_dimension(int k) const;
    bool has_face(FaceMask f) const;

    bool operator==(const SimplicialComplex& other) const {
        return vertex_count_ == other.vertex_count_ && faces_ == other.faces_;
    }

private:
    SimplicialComplex(int vertex_count, std::vector<FaceMask> faces);

    int vertex_count_;
    std::vector<FaceMask> faces_; // sorted by (popcount, value)
};

/// Signed boundary matrix from k-faces to (k-1)-faces (k >= 0); rows are
/// (k-1)-faces, columns k-faces, entries in {-1, 0, 1}.
DenseIntMatrix boundary_matrix(const SimplicialComplex& complex, int k);

/// Dimensions of reduced simplicial homology over the field, indexed by
/// k + 1 for k = -1 .. vertex_count - 1 (so result[0] is the reduced
/// (-1)-st homology, which is 1 exactly for the irrelevant complex).
std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const FieldSpec& field);

} // namespace regjump

#endif
