#include "coxfold/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace coxfold {

GMat reflection_matrix(const GVec& alpha) {
    Golden norm = dot(alpha, alpha);
    if (norm.is_zero()) throw std::domain_error("reflection in zero-norm vector");
    Golden scale = Golden(2) * golden_inverse(norm);
    const std::size_t n = alpha.size();
    GMat m = GMat::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i].is_zero()) continue;
        Golden row = scale * alpha[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (alpha[j].is_zero()) continue;
            m(i, j) -= row * alpha[j];
        }
    }
    return m;
}

int element_order(const GMat& m, int cap) {
    if (m.rows() != m.cols()) throw std::invalid_argument("order of non-square");
    GMat id = GMat::identity(m.rows());
    GMat p = m;
    for (int k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    return 0;
}

std::pair<std::vector<int>, std::vector<int>> two_coloring(const GMat& cartan) {
    const int n = static_cast<int>(cartan.rows());
    std::vector<int> color(n, -1);
    std::deque<int> queue;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.push_back(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w) {
                if (w == v || cartan(v, w).is_zero()) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    throw std::domain_error("diagram is not bipartite");
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> out;
    int first_color = color[0];
    for (int v = 0; v < n; ++v) {
        (color[v] == first_color ? out.first : out.second).push_back(v + 1);
    }
    // The construction needs each class to be a set of orthogonal roots.
    auto check = [&](const std::vector<int>& cls) {
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (!cartan(cls[i] - 1, cls[j] - 1).is_zero())
                    throw std::logic_error("color class is not orthogonal");
    };
    check(out.first);
    check(out.second);
    return out;
}

DihedralGenerators dihedral_generators(const RootSystem& sys) {
    auto [c1, c2] = two_coloring(sys.cartan);
    DihedralGenerators g;
    g.class1 = c1;
    g.class2 = c2;
    g.h = sys.coxeter_number;
    g.r1 = GMat::identity(sys.ambient_dim);
    g.r2 = GMat::identity(sys.ambient_dim);
    for (int i : c1) g.r1 = g.r1 * reflection_matrix(sys.simple_roots[i - 1]);
    for (int i : c2) g.r2 = g.r2 * reflection_matrix(sys.simple_roots[i - 1]);
    return g;
}

Orbit orbit(const std::vector<GMat>& generators, const GVec& seed, std::size_t cap) {
    Orbit out;
    out.seed = seed;
    std::unordered_set<std::string> seen;
    std::deque<GVec> frontier;
    seen.insert(key_of(seed));
    frontier.push_back(seed);
    out.points.push_back(seed);
    while (!frontier.empty()) {
        GVec v = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            GVec w = g * v;
            if (seen.insert(key_of(w)).second) {
                if (seen.size() > cap) throw std::length_error("orbit cap exceeded");
                out.points.push_back(w);
                frontier.push_back(w);
            }
        }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const GVec& a, const GVec& b) { return key_of(a) < key_of(b); });
    return out;
}

mpz_class enumerate_group(const std::vector<GMat>& generators, std::size_t cap) {
    if (generators.empty()) return 1;
    const std::size_t n = generators.front().rows();
    std::unordered_set<std::string> seen;
    std::deque<GMat> frontier;
    GMat id = GMat::identity(n);
    seen.insert(key_of(id));
    frontier.push_back(id);
    while (!frontier.empty()) {
        GMat m = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            GMat p = m * g;
            if (seen.insert(key_of(p)).second) {
                if (seen.size() > cap) throw std::length_error("group cap exceeded");
                frontier.push_back(std::move(p));
            }
        }
    }
    return mpz_class(static_cast<unsigned long>(seen.size()));
}

GMat word_matrix(const std::vector<GMat>& generators, const std::vector<int>& word) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    GMat m = GMat::identity(generators.front().rows());
    for (int letter : word) {
        if (letter < 1 || letter > static_cast<int>(generators.size()))
            throw std::out_of_range("word letter out of range");
        m = m * generators[letter - 1];
    }
    return m;
}

static std::string word_text(const std::vector<int>& word, int exponent) {
    std::string s = "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += " ";
        s += "R" + std::to_string(word[i]);
    }
    s += ")^" + std::to_string(exponent);
    return s;
}

RelationReport verify_relations(
    const std::vector<GMat>& generators,
    const std::vector<std::pair<std::vector<int>, int>>& relations) {
    RelationReport report;
    for (const auto& [word, exponent] : relations) {
        RelationCheck c;
        c.word = word_text(word, exponent);
        c.exponent = exponent;
        GMat m = word_matrix(generators, word);
        c.actual_order = element_order(m, std::max(exponent * 2, 64));
        c.holds = c.actual_order != 0 && exponent % c.actual_order == 0;
        c.minimal = c.actual_order == exponent;
        if (!(c.holds && c.minimal)) report.all_pass = false;
        report.checks.push_back(std::move(c));
    }
    return report;
}

bool is_orthogonal(const GMat& m) {
    return transpose(m) * m == GMat::identity(m.rows());
}

}  // namespace coxfold
