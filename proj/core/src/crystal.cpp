#include "genexp/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace genexp {

int eps_on_word(const std::vector<int>& word, int i) {
    int run = 0, best = 0;
    for (int v : word) {
        if (v == i + 1)
            best = std::max(best, ++run);
        else if (v == i)
            --run;
    }
    return best;
}

int phi_on_word(const std::vector<int>& word, int i) {
    int run = 0, best = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == i)
            best = std::max(best, ++run);
        else if (*it == i + 1)
            --run;
    }
    return best;
}

std::optional<size_t> raise_position(const std::vector<int>& word, int i) {
    // Uncancelled i+1 furthest to the right: each i opens a bracket that
    // swallows the next i+1.
    std::optional<size_t> target;
    int open = 0;
    for (size_t p = 0; p < word.size(); ++p) {
        if (word[p] == i) {
            ++open;
        } else if (word[p] == i + 1) {
            if (open > 0)
                --open;
            else
                target = p;
        }
    }
    return target;
}

std::optional<size_t> lower_position(const std::vector<int>& word, int i) {
    // Mirror image: leftmost i not cancelled by an i+1 to its right.
    std::optional<size_t> target;
    int open = 0;
    for (size_t q = word.size(); q-- > 0;) {
        if (word[q] == i + 1) {
            ++open;
        } else if (word[q] == i) {
            if (open > 0)
                --open;
            else
                target = q;
        }
    }
    return target;
}

EpsPhiProfile eps_phi_profile(const std::vector<int>& word, int max_index) {
    EpsPhiProfile p;
    p.eps.reserve(max_index);
    p.phi.reserve(max_index);
    for (int i = 1; i <= max_index; ++i) {
        p.eps.push_back(eps_on_word(word, i));
        p.phi.push_back(phi_on_word(word, i));
    }
    return p;
}

EpsPhiProfile eps_phi(const Tableau& t) {
    return eps_phi_profile(t.reading_word(), t.alphabet() - 1);
}

std::optional<Tableau> crystal_e(const Tableau& t, int i) {
    auto pos = raise_position(t.reading_word(), i);
    if (!pos) return std::nullopt;
    const auto [r, c] = t.reading_cells()[*pos];
    return t.replaced(r, c, i);
}

std::optional<Tableau> crystal_f(const Tableau& t, int i) {
    auto pos = lower_position(t.reading_word(), i);
    if (!pos) return std::nullopt;
    const auto [r, c] = t.reading_cells()[*pos];
    return t.replaced(r, c, i + 1);
}

RaisePath to_highest_weight(const Tableau& t) {
    RaisePath path{{}, t};
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int i = 1; i < path.highest.alphabet(); ++i) {
            if (auto up = crystal_e(path.highest, i)) {
                path.highest = std::move(*up);
                path.word.push_back(i);
                progressed = true;
                break;
            }
        }
    }
    return path;
}

Tableau lusztig_involution(const Tableau& t) {
    const int m = t.alphabet();
    const RaisePath path = to_highest_weight(t);
    Tableau x = lowest_weight_tableau(t.shape(), m);
    for (size_t j = path.word.size(); j-- > 0;) {
        auto up = crystal_e(x, m - path.word[j]);
        if (!up) throw std::logic_error("involution replay left the crystal");
        x = std::move(*up);
    }
    return x;
}

namespace {

std::vector<int> tensor_word(const TensorElement& x) {
    if (x.left.alphabet() != x.right.alphabet())
        throw std::invalid_argument("tensor factors must share an alphabet");
    std::vector<int> w = x.left.reading_word();
    const std::vector<int> rw = x.right.reading_word();
    w.insert(w.end(), rw.begin(), rw.end());
    return w;
}

TensorElement tensor_apply(const TensorElement& x, size_t pos, int new_letter) {
    const size_t left_size = x.left.reading_word().size();
    if (pos < left_size) {
        const auto [r, c] = x.left.reading_cells()[pos];
        return {x.left.replaced(r, c, new_letter), x.right};
    }
    const auto [r, c] = x.right.reading_cells()[pos - left_size];
    return {x.left, x.right.replaced(r, c, new_letter)};
}

}  // namespace

int tensor_eps(const TensorElement& x, int i) { return eps_on_word(tensor_word(x), i); }

int tensor_phi(const TensorElement& x, int i) { return phi_on_word(tensor_word(x), i); }

std::optional<TensorElement> tensor_e(const TensorElement& x, int i) {
    auto pos = raise_position(tensor_word(x), i);
    if (!pos) return std::nullopt;
    return tensor_apply(x, *pos, i);
}

std::optional<TensorElement> tensor_f(const TensorElement& x, int i) {
    auto pos = lower_position(tensor_word(x), i);
    if (!pos) return std::nullopt;
    return tensor_apply(x, *pos, i + 1);
}

TensorRaisePath tensor_to_highest(const TensorElement& x) {
    TensorRaisePath path{{}, x};
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int i = 1; i < path.highest.left.alphabet(); ++i) {
            if (auto up = tensor_e(path.highest, i)) {
                path.highest = std::move(*up);
                path.word.push_back(i);
                progressed = true;
                break;
            }
        }
    }
    return path;
}

TensorElement tensor_xi(const TensorElement& x) {
    const int m = x.left.alphabet();
    const TensorRaisePath up = tensor_to_highest(x);

    // Lower the highest element of the component to its lowest element;
    // within one component greedy lowering always lands there.
    TensorElement low = up.highest;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int i = 1; i < m; ++i) {
            if (auto down = tensor_f(low, i)) {
                low = std::move(*down);
                progressed = true;
                break;
            }
        }
    }

    for (size_t j = up.word.size(); j-- > 0;) {
        auto step = tensor_e(low, m - up.word[j]);
        if (!step) throw std::logic_error("tensor involution replay left the crystal");
        low = std::move(*step);
    }
    return low;
}

TensorElement commutor(const TensorElement& x) {
    return tensor_xi({lusztig_involution(x.right), lusztig_involution(x.left)});
}

}  // namespace genexp
