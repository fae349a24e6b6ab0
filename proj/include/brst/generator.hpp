#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace brst {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& name)
        : Error("unknown generator: " + name) {}
};

enum class GenKind { Coordinate, Antighost, Ghost };

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return Parity((uint8_t(a) + uint8_t(b)) % 2);
}

using GenId = uint32_t;

/// One declared generator of the graded algebra. Ghosts carry a level:
/// level 0 are the ordinary eta^a, level k>=1 the ghosts-of-ghosts eta^{a_k}
/// with pureGhost k+1 and aux k.
struct Generator {
    GenId id = 0;
    GenKind kind = GenKind::Coordinate;
    int index = 0; // 1-based within its block
    int level = 0; // ghosts only
    std::string name;
    Parity parity = Parity::Even;
    int pureGhost = 0;
    int antiGhost = 0;
    int aux = 0;

    bool odd() const { return parity == Parity::Odd; }
};

/// The declared generators, in the global canonical order
/// coordinates < antighosts < ghosts < higher ghosts (each block by index).
/// GenId equals the position in that order.
class GeneratorTable {
  public:
    GeneratorTable() = default;

    /// Extended phase space C[z] (x) C[P] (x) C[eta]: coordinates
    /// x1..xn,p1..pn, antighosts P1..PM, ghosts eta1..etaM.
    static GeneratorTable extendedPhaseSpace(int n, int constraints,
                                             const std::vector<std::string>& coordNames = {});

    /// Ghosts-only table over an optional coordinate block; used by the
    /// Chevalley-Eilenberg and reducible complexes.
    static GeneratorTable ghostComplex(int nCoords, int ghosts,
                                       const std::vector<std::string>& coordNames = {});

    /// Append a block of level-k ghosts (k >= 1), names "eta<k>_<i>".
    /// epsilons are the underlying parities of the level-k parameters;
    /// the generator parity is epsilon + k + 1 mod 2.
    void addHigherGhosts(int level, int count, const std::vector<int>& epsilons = {});

    /// Append one odd or even generator of prescribed gradings (reducible
    /// complexes with bespoke generator content).
    GenId addGenerator(const std::string& name, Parity parity, int pureGhost,
                       int antiGhost, int aux, GenKind kind = GenKind::Ghost,
                       int level = 0);

    const Generator& gen(GenId id) const { return gens_.at(id); }
    const Generator& byName(const std::string& name) const;
    bool has(const std::string& name) const { return byName_.count(name) != 0; }
    GenId idOf(const std::string& name) const { return byName(name).id; }
    size_t size() const { return gens_.size(); }
    const std::vector<Generator>& all() const { return gens_; }

    int coordinateCount() const { return nCoords_; }
    int constraintCount() const { return nConstraints_; }

    /// Ids of one block, in index order.
    std::vector<GenId> coordinates() const;
    std::vector<GenId> antighosts() const;
    std::vector<GenId> ghosts(int level = 0) const;

    GenId coordinate(int i) const; // 0-based over the 2n block
    GenId antighost(int a) const;  // 1-based
    GenId ghost(int a) const;      // 1-based, level 0

  private:
    std::vector<Generator> gens_;
    std::map<std::string, GenId> byName_;
    int nCoords_ = 0;      // 2n
    int nConstraints_ = 0; // M

    GenId push(Generator g);
};

} // namespace brst
