#ifndef REGJUMP_BETTI_HPP
#define REGJUMP_BETTI_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "regjump/field.hpp"
#include "regjump/ideal.hpp"
#include "regjump/simplicial.hpp"

namespace regjump {

/// Graded Betti numbers of an ideal I (not of R/I: the entry (i, j) here
/// equals the (i+1, j) entry of the shifted R/I convention). Zeros are
/// omitted; every stored dimension is positive.
class BettiTable {
public:
    using Key = std::pair<int, long long>; // (homological index i, internal degree j)

    /// Convention marker: entries describe the ideal, not the quotient
    /// ring.
    static constexpr const char* convention = "ideal";

    explicit BettiTable(FieldSpec field) : field_(field) {}

    void add(int i, long long j, long long dim);

    const std::map<Key, long long>& entries() const { return entries_; }
    long long entry(int i, long long j) const;

    /// t_i = max { j : (i, j) present }; nullopt when the row is empty
    /// (the -infinity convention).
    std::optional<long long> t(int i) const;
    int max_homological_index() const;
    long long regularity() const;

    const FieldSpec& field() const { return field_; }

    bool operator==(const BettiTable& other) const {
        return field_ == other.field_ && entries_ == other.entries_;
    }

private:
    FieldSpec field_;
    std::map<Key, long long> entries_;
};

/// Squarefree complex at m: faces are the variable subsets t with
/// m / x^t still in the ideal. Downward closed whenever m lies in I.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& m);

/// Graded Betti numbers of the ideal over the field, computed from
/// reduced homology of upper-Koszul complexes at lcm-lattice degrees and
/// aggregated by total degree. threads = 0 picks the configured default.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field, int threads = 0);

struct MultigradedBettiEntry {
    int i;
    Monomial degree;
    long long dim;
};

/// Verbose multigraded form of betti_table (entries in lattice order).
std::vector<MultigradedBettiEntry> betti_table_multigraded(const MonomialIdeal& ideal,
                                                           const FieldSpec& field,
                                                           int threads = 0);

long long regularity(const MonomialIdeal& ideal, const FieldSpec& field, int threads = 0);

/// True iff the regularity equals the initial degree.
bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field, int threads = 0);

/// Euler-characteristic consistency: for every degree j the alternating
/// sum of the Betti column must equal the negated Hilbert-numerator
/// coefficient. Field-independent by construction.
bool euler_check(const MonomialIdeal& ideal, const FieldSpec& field);

/// Worker-count default used when a threads argument is 0: the
/// REGJUMP_THREADS environment variable, else the hardware concurrency.
int default_thread_count();

} // namespace regjump

#endif
