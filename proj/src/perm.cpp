#include "dyckmap/perm.hpp"

#include <numeric>
#include <sstream>

namespace dyckmap {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int m = static_cast<int>(images_.size());
    if (m == 0) throw error(errc::index_out_of_range, "empty permutation");
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (int v : images_) {
        if (v < 1 || v > m)
            throw error(errc::index_out_of_range, "permutation value outside [1, m]");
        if (seen[static_cast<size_t>(v - 1)])
            throw error(errc::index_out_of_range, "repeated permutation value");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Perm Perm::identity(int m) {
    std::vector<int> images(static_cast<size_t>(m));
    std::iota(images.begin(), images.end(), 1);
    return Perm(std::move(images));
}

Perm Perm::parse(const std::string& csv) {
    std::vector<int> images;
    if (csv.find(',') == std::string::npos && !csv.empty() && csv.size() <= 9) {
        // compact digit form, e.g. "14285763"
        for (char c : csv) {
            if (c < '1' || c > '9')
                throw error(errc::non_alphabet, "expected digits 1-9 in compact permutation");
            images.push_back(c - '0');
        }
        return Perm(std::move(images));
    }
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size())
            throw error(errc::non_alphabet, "bad permutation entry: " + item);
        images.push_back(v);
    }
    return Perm(std::move(images));
}

int Perm::apply(int i) const {
    if (i < 1 || i > length())
        throw error(errc::index_out_of_range, "permutation index out of range");
    return images_[static_cast<size_t>(i - 1)];
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= length(); ++i)
        inv[static_cast<size_t>(images_[static_cast<size_t>(i - 1)] - 1)] = i;
    return Perm(std::move(inv));
}

Perm Perm::compose(const Perm& other) const {
    if (length() != other.length())
        throw error(errc::size_mismatch, "composition of permutations of different sizes");
    std::vector<int> out(images_.size());
    for (int i = 1; i <= length(); ++i)
        out[static_cast<size_t>(i - 1)] = apply(other.apply(i));
    return Perm(std::move(out));
}

std::string Perm::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < length(); ++i) {
        if (i) out << ',';
        out << images_[static_cast<size_t>(i)];
    }
    return out.str();
}

}  // namespace dyckmap
