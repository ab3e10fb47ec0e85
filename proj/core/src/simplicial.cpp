#include "regjump/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "regjump/errors.hpp"

namespace regjump {

namespace {

bool face_order(FaceMask a, FaceMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb)
        return pa < pb;
    return a < b;
}

} // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<FaceMask> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces)) {
    if (vertex_count < 0 || vertex_count > 31)
        throw validation_error("simplicial complex supports between 0 and 31 vertices");
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
    return SimplicialComplex(vertex_count, {});
}

SimplicialComplex SimplicialComplex::irrelevant_complex(int vertex_count) {
    return SimplicialComplex(vertex_count, {0});
}

SimplicialComplex SimplicialComplex::from_faces(int vertex_count, std::vector<FaceMask> faces) {
    std::sort(faces.begin(), faces.end(), face_order);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex c(vertex_count, std::move(faces));
    std::unordered_set<FaceMask> present(c.faces_.begin(), c.faces_.end());
    for (FaceMask f : c.faces_) {
        if (vertex_count < 31 && (f >> vertex_count) != 0)
            throw validation_error("face uses a vertex outside the complex");
        FaceMask rest = f;
        while (rest) {
            FaceMask bit = rest & (~rest + 1);
            if (!present.count(f ^ bit))
                throw validation_error("face set is not downward closed");
            rest ^= bit;
        }
    }
    return c;
}

SimplicialComplex SimplicialComplex::closure_of(int vertex_count, const std::vector<FaceMask>& faces) {
    std::unordered_set<FaceMask> all;
    std::vector<FaceMask> stack(faces.begin(), faces.end());
    while (!stack.empty()) {
        FaceMask f = stack.back();
        stack.pop_back();
        if (!all.insert(f).second)
            continue;
        FaceMask rest = f;
        while (rest) {
            FaceMask bit = rest & (~rest + 1);
            stack.push_back(f ^ bit);
            rest ^= bit;
        }
    }
    std::vector<FaceMask> sorted(all.begin(), all.end());
    std::sort(sorted.begin(), sorted.end(), face_order);
    return SimplicialComplex(vertex_count, std::move(sorted));
}

std::vector<FaceMask> SimplicialComplex::faces_of_dimension(int k) const {
    std::vector<FaceMask> out;
    for (FaceMask f : faces_)
        if (std::popcount(f) == k + 1)
            out.push_back(f);
    return out;
}

bool SimplicialComplex::has_face(FaceMask f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f, face_order);
}

DenseIntMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
    if (k < 0)
        throw validation_error("boundary_matrix requires k >= 0");
    std::vector<FaceMask> domain = complex.faces_of_dimension(k);
    std::vector<FaceMask> codomain = complex.faces_of_dimension(k - 1);
    std::unordered_map<FaceMask, std::size_t> row_of;
    for (std::size_t i = 0; i < codomain.size(); ++i)
        row_of[codomain[i]] = i;
    DenseIntMatrix m(codomain.size(), domain.size());
    for (std::size_t col = 0; col < domain.size(); ++col) {
        FaceMask f = domain[col];
        int sign = 1;
        FaceMask rest = f;
        while (rest) {
            FaceMask bit = rest & (~rest + 1);
            auto it = row_of.find(f ^ bit);
            if (it != row_of.end())
                m.at(it->second, col) = sign;
            sign = -sign;
            rest ^= bit;
        }
    }
    return m;
}

std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const FieldSpec& field) {
    int n = complex.vertex_count();
    std::vector<long long> dims(static_cast<std::size_t>(n) + 1, 0);
    if (complex.is_void())
        return dims;
    // counts[k+1] = number of k-faces; ranks[k+1] = rank of the boundary
    // map leaving dimension k.
    std::vector<long long> counts(static_cast<std::size_t>(n) + 2, 0);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 2, 0);
    for (int k = -1; k < n; ++k)
        counts[k + 1] = static_cast<long long>(complex.faces_of_dimension(k).size());
    for (int k = 0; k < n; ++k) {
        if (counts[k + 1] == 0)
            break;
        ranks[k + 1] = rank_over(boundary_matrix(complex, k), field);
    }
    for (int k = -1; k < n; ++k) {
        long long d = counts[k + 1] - static_cast<long long>(ranks[k + 1]) -
                      static_cast<long long>(ranks[k + 2]);
        dims[k + 1] = d;
        if (d < 0)
            throw computation_error("negative homology dimension; rank computation inconsistent");
    }
    return dims;
}

} // namespace regjump
