#include "selfsim/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace selfsim {

Permutation Permutation::from_images(std::vector<int> images) {
    Permutation p;
    const int m = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<size_t>(m), false);
    p.img_.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int v = images[static_cast<size_t>(i)];
        if (v < 0 || v >= m || seen[static_cast<size_t>(v)])
            throw InputError("permutation images are not a bijection");
        seen[static_cast<size_t>(v)] = true;
        p.img_[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
    }
    return p;
}

Permutation Permutation::cycle(int m, const std::vector<int>& pts) {
    std::vector<int> img(static_cast<size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        int from = pts[i], to = pts[(i + 1) % n];
        if (from < 0 || from >= m) throw InputError("cycle point out of range");
        img[static_cast<size_t>(from)] = to;
    }
    return from_images(img);
}

Permutation Permutation::parse(const std::string& text, int m) {
    std::string s = text;
    if (s.find('(') != std::string::npos) {
        std::vector<int> img(static_cast<size_t>(m));
        std::iota(img.begin(), img.end(), 0);
        size_t pos = 0;
        while (pos < s.size()) {
            while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) != 0)) ++pos;
            if (pos >= s.size()) break;
            if (s[pos] != '(') throw InputError("expected '(' in cycle notation");
            size_t close = s.find(')', pos);
            if (close == std::string::npos) throw InputError("unbalanced cycle notation");
            std::istringstream in(s.substr(pos + 1, close - pos - 1));
            std::vector<int> pts;
            std::string tok;
            while (in >> tok) {
                // tolerate commas between points
                std::string digits;
                for (char c : tok)
                    if (std::isdigit(static_cast<unsigned char>(c)) != 0) digits += c;
                if (!digits.empty()) pts.push_back(std::stoi(digits) - 1);
            }
            for (size_t i = 0; i < pts.size(); ++i) {
                int from = pts[i], to = pts[(i + 1) % pts.size()];
                if (from < 0 || from >= m) throw InputError("cycle point out of range");
                img[static_cast<size_t>(from)] = to;
            }
            pos = close + 1;
        }
        return from_images(img);
    }
    std::istringstream in(s);
    std::vector<int> img;
    int v = 0;
    while (in >> v) img.push_back(v - 1);
    if (static_cast<int>(img.size()) != m)
        throw InputError("permutation image list has wrong length");
    return from_images(img);
}

Permutation Permutation::then(const Permutation& q) const {
    if (degree() != q.degree()) throw InputError("permutation degree mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = q.img_[img_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Permutation::order() const {
    int ord = 1;
    Permutation p = *this;
    while (!p.is_identity()) {
        p = p.then(*this);
        ++ord;
    }
    return ord;
}

std::string Permutation::image_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i > 0) out << ' ';
        out << (static_cast<int>(img_[i]) + 1);
    }
    return out.str();
}

std::string Permutation::cycle_string() const {
    std::ostringstream out;
    const int m = degree();
    std::vector<bool> seen(static_cast<size_t>(m), false);
    bool any = false;
    for (int i = 0; i < m; ++i) {
        if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i) continue;
        any = true;
        out << '(' << (i + 1);
        seen[static_cast<size_t>(i)] = true;
        for (int j = img_[static_cast<size_t>(i)]; j != i; j = img_[static_cast<size_t>(j)]) {
            out << ' ' << (j + 1);
            seen[static_cast<size_t>(j)] = true;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> img(static_cast<size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace selfsim
