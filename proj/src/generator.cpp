#include "brst/generator.hpp"

namespace brst {

GenId GeneratorTable::push(Generator g) {
    g.id = GenId(gens_.size());
    if (byName_.count(g.name))
        throw Error("duplicate generator name: " + g.name);
    byName_[g.name] = g.id;
    gens_.push_back(std::move(g));
    return gens_.back().id;
}

GeneratorTable GeneratorTable::extendedPhaseSpace(int n, int constraints,
                                                  const std::vector<std::string>& coordNames) {
    GeneratorTable t;
    t.nCoords_ = 2 * n;
    t.nConstraints_ = constraints;
    if (!coordNames.empty() && int(coordNames.size()) != 2 * n)
        throw Error("coordinateNames must list all 2n coordinates");
    for (int i = 0; i < 2 * n; ++i) {
        Generator g;
        g.kind = GenKind::Coordinate;
        g.index = i + 1;
        g.name = coordNames.empty()
                     ? (i < n ? "x" + std::to_string(i + 1) : "p" + std::to_string(i - n + 1))
                     : coordNames[i];
        t.push(g);
    }
    for (int a = 1; a <= constraints; ++a) {
        Generator g;
        g.kind = GenKind::Antighost;
        g.index = a;
        g.name = "P" + std::to_string(a);
        g.parity = Parity::Odd;
        g.antiGhost = 1;
        t.push(g);
    }
    for (int a = 1; a <= constraints; ++a) {
        Generator g;
        g.kind = GenKind::Ghost;
        g.index = a;
        g.name = "eta" + std::to_string(a);
        g.parity = Parity::Odd; // Bosonic constraints: eps(eta) = eps(G)+1 = 1
        g.pureGhost = 1;
        t.push(g);
    }
    return t;
}

GeneratorTable GeneratorTable::ghostComplex(int nCoords, int ghosts,
                                            const std::vector<std::string>& coordNames) {
    GeneratorTable t;
    t.nCoords_ = nCoords;
    t.nConstraints_ = ghosts;
    for (int i = 0; i < nCoords; ++i) {
        Generator g;
        g.kind = GenKind::Coordinate;
        g.index = i + 1;
        g.name = coordNames.empty() ? "x" + std::to_string(i + 1) : coordNames[i];
        t.push(g);
    }
    for (int a = 1; a <= ghosts; ++a) {
        Generator g;
        g.kind = GenKind::Ghost;
        g.index = a;
        g.name = "eta" + std::to_string(a);
        g.parity = Parity::Odd;
        g.pureGhost = 1;
        t.push(g);
    }
    return t;
}

void GeneratorTable::addHigherGhosts(int level, int count, const std::vector<int>& epsilons) {
    if (level < 1)
        throw Error("higher ghosts start at level 1");
    for (int i = 1; i <= count; ++i) {
        int eps = epsilons.empty() ? 0 : epsilons.at(i - 1);
        Generator g;
        g.kind = GenKind::Ghost;
        g.level = level;
        g.index = i;
        g.name = "eta" + std::to_string(level) + "_" + std::to_string(i);
        g.parity = Parity((eps + level + 1) % 2);
        g.pureGhost = level + 1;
        g.aux = level;
        push(g);
    }
}

GenId GeneratorTable::addGenerator(const std::string& name, Parity parity, int pureGhost,
                                   int antiGhost, int aux, GenKind kind, int level) {
    Generator g;
    g.kind = kind;
    g.level = level;
    g.name = name;
    g.parity = parity;
    g.pureGhost = pureGhost;
    g.antiGhost = antiGhost;
    g.aux = aux;
    return push(g);
}

const Generator& GeneratorTable::byName(const std::string& name) const {
    auto it = byName_.find(name);
    if (it == byName_.end())
        throw UnknownGenerator(name);
    return gens_[it->second];
}

std::vector<GenId> GeneratorTable::coordinates() const {
    std::vector<GenId> out;
    for (const auto& g : gens_)
        if (g.kind == GenKind::Coordinate)
            out.push_back(g.id);
    return out;
}

std::vector<GenId> GeneratorTable::antighosts() const {
    std::vector<GenId> out;
    for (const auto& g : gens_)
        if (g.kind == GenKind::Antighost)
            out.push_back(g.id);
    return out;
}

std::vector<GenId> GeneratorTable::ghosts(int level) const {
    std::vector<GenId> out;
    for (const auto& g : gens_)
        if (g.kind == GenKind::Ghost && g.level == level)
            out.push_back(g.id);
    return out;
}

GenId GeneratorTable::coordinate(int i) const {
    if (i < 0 || i >= nCoords_)
        throw Error("coordinate index out of range");
    return GenId(i);
}

GenId GeneratorTable::antighost(int a) const {
    return byName("P" + std::to_string(a)).id;
}

GenId GeneratorTable::ghost(int a) const {
    return byName("eta" + std::to_string(a)).id;
}

} // namespace brst
