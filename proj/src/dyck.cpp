#include "dyckmap/dyck.hpp"

#include <algorithm>
#include <sstream>

namespace dyckmap {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.size() % 2 != 0 || steps_.empty())
        throw error(errc::odd_length, "a Dyck path needs a positive even number of steps");
    int balance = 0;
    for (Step s : steps_) {
        balance += (s == Step::Up) ? 1 : -1;
        if (balance < 0)
            throw error(errc::prefix_violation, "path dips below the x-axis");
    }
    if (balance != 0)
        throw error(errc::unbalanced, "up and down step counts differ");
    n_ = static_cast<int>(steps_.size()) / 2;
}

Step DyckPath::step(int k) const {
    if (k < 1 || k > length())
        throw error(errc::index_out_of_range, "step index out of [1, 2n]");
    return steps_[static_cast<size_t>(k - 1)];
}

int DyckPath::height(int k) const {
    if (k < 0 || k > length())
        throw error(errc::index_out_of_range, "height index out of [0, 2n]");
    int h = 0;
    for (int i = 0; i < k; ++i) h += (steps_[static_cast<size_t>(i)] == Step::Up) ? 1 : -1;
    return h;
}

int DyckPath::peak_height() const {
    int h = 0, best = 0;
    for (Step s : steps_) {
        h += (s == Step::Up) ? 1 : -1;
        best = std::max(best, h);
    }
    return best;
}

std::vector<int> DyckPath::up_positions() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n_));
    for (int i = 1; i <= length(); ++i)
        if (steps_[static_cast<size_t>(i - 1)] == Step::Up) out.push_back(i);
    return out;
}

std::vector<int> DyckPath::down_positions() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n_));
    for (int i = 1; i <= length(); ++i)
        if (steps_[static_cast<size_t>(i - 1)] == Step::Down) out.push_back(i);
    return out;
}

std::string DyckPath::word() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(s == Step::Up ? 'u' : 'd');
    return out;
}

Pairing::Pairing(std::vector<int> partner) : partner_(std::move(partner)) {
    const int m = static_cast<int>(partner_.size());
    if (m % 2 != 0 || m == 0)
        throw error(errc::odd_length, "a pairing needs a positive even domain");
    for (int i = 1; i <= m; ++i) {
        int p = partner_[static_cast<size_t>(i - 1)];
        if (p < 1 || p > m)
            throw error(errc::index_out_of_range, "pairing value outside [1, 2n]");
        if (p == i)
            throw error(errc::crossing_pairing, "pairing has a fixed point");
        if (partner_[static_cast<size_t>(p - 1)] != i)
            throw error(errc::crossing_pairing, "pairing is not an involution");
    }
}

int Pairing::partner(int i) const {
    if (i < 1 || i > length())
        throw error(errc::index_out_of_range, "pairing index out of [1, 2n]");
    return partner_[static_cast<size_t>(i - 1)];
}

std::string Pairing::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < length(); ++i) {
        if (i) out << ',';
        out << partner_[static_cast<size_t>(i)];
    }
    return out.str();
}

bool Block::contains(int x, int modulus) const {
    // offset of x from start around the circle
    int off = ((x - start) % modulus + modulus) % modulus;
    return off < size;
}

DyckPath parse_word(const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'u': case 'U': case '(': steps.push_back(Step::Up); break;
            case 'd': case 'D': case ')': steps.push_back(Step::Down); break;
            default:
                throw error(errc::non_alphabet,
                            std::string("unexpected character '") + c + "' in Dyck word");
        }
    }
    return DyckPath(std::move(steps));
}

Pairing tunneling(const DyckPath& path) {
    std::vector<int> partner(static_cast<size_t>(path.length()), 0);
    std::vector<int> open;
    open.reserve(static_cast<size_t>(path.size()));
    for (int k = 1; k <= path.length(); ++k) {
        if (path.step(k) == Step::Up) {
            open.push_back(k);
        } else {
            int mate = open.back();
            open.pop_back();
            partner[static_cast<size_t>(k - 1)] = mate;
            partner[static_cast<size_t>(mate - 1)] = k;
        }
    }
    return Pairing(std::move(partner));
}

bool is_noncrossing(const Pairing& pairing) {
    // Stack scan: chords must nest like parentheses in the linear order,
    // which on the circle is exactly non-crossing.
    std::vector<int> open;
    for (int i = 1; i <= pairing.length(); ++i) {
        if (pairing.partner(i) > i) {
            open.push_back(i);
        } else {
            if (open.empty() || open.back() != pairing.partner(i)) return false;
            open.pop_back();
        }
    }
    return open.empty();
}

DyckPath path_from_tunneling(const Pairing& pairing) {
    if (!is_noncrossing(pairing))
        throw error(errc::crossing_pairing, "pairing has crossing chords");
    std::vector<Step> steps(static_cast<size_t>(pairing.length()));
    for (int k = 1; k <= pairing.length(); ++k)
        steps[static_cast<size_t>(k - 1)] = (k < pairing.partner(k)) ? Step::Up : Step::Down;
    return DyckPath(std::move(steps));
}

namespace {

void emit_paths(std::vector<Step>& prefix, int ups, int downs, int n,
                const std::function<void(const DyckPath&)>& visit) {
    if (ups + downs == 2 * n) {
        visit(DyckPath(prefix));
        return;
    }
    if (ups < n) {
        prefix.push_back(Step::Up);
        emit_paths(prefix, ups + 1, downs, n, visit);
        prefix.pop_back();
    }
    if (downs < ups) {
        prefix.push_back(Step::Down);
        emit_paths(prefix, ups, downs + 1, n, visit);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_path(int n, const std::function<void(const DyckPath&)>& visit, int cap) {
    if (n < 1) throw error(errc::index_out_of_range, "path size must be positive");
    if (n > cap)
        throw error(errc::cap_exceeded,
                    "enumeration of D_" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<Step> prefix;
    prefix.reserve(static_cast<size_t>(2 * n));
    emit_paths(prefix, 0, 0, n, visit);
}

std::vector<DyckPath> enumerate_paths(int n, int cap) {
    std::vector<DyckPath> out;
    for_each_path(n, [&](const DyckPath& p) { out.push_back(p); }, cap);
    return out;
}

BigInt catalan(unsigned n) {
    return binomial(2LL * n, n) / (n + 1);
}

}  // namespace dyckmap
