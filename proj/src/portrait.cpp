#include "selfsim/portrait.hpp"

#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

Portrait::Portrait(int m, int depth, std::vector<Permutation> perms)
    : m_(m), depth_(depth), perms_(std::move(perms)) {
    if (perms_.size() != vertex_count(m, depth))
        throw InputError("portrait is not complete for its depth");
}

Portrait Portrait::identity(int m, int depth) {
    return Portrait(m, depth, std::vector<Permutation>(vertex_count(m, depth), Permutation(m)));
}

size_t Portrait::vertex_count(int m, int depth) {
    size_t total = 0, level = 1;
    for (int t = 0; t < depth; ++t) {
        total += level;
        level *= static_cast<size_t>(m);
    }
    return total;
}

size_t Portrait::level_offset(int m, int level) {
    return vertex_count(m, level);
}

const Permutation& Portrait::perm_at(int level, size_t idx) const {
    return perms_[level_offset(m_, level) + idx];
}

const Permutation& Portrait::perm_at(const std::vector<int>& vertex) const {
    size_t idx = 0;
    for (int y : vertex) idx = idx * static_cast<size_t>(m_) + static_cast<size_t>(y);
    return perm_at(static_cast<int>(vertex.size()), idx);
}

size_t Portrait::apply(int level, size_t idx) const {
    // walk down from the root, tracking the image vertex
    std::vector<int> digits(static_cast<size_t>(level));
    for (int t = level - 1; t >= 0; --t) {
        digits[static_cast<size_t>(t)] = static_cast<int>(idx % static_cast<size_t>(m_));
        idx /= static_cast<size_t>(m_);
    }
    size_t src = 0, dst = 0;
    for (int t = 0; t < level; ++t) {
        int y = digits[static_cast<size_t>(t)];
        int y2 = perm_at(t, src)(y);
        src = src * static_cast<size_t>(m_) + static_cast<size_t>(y);
        dst = dst * static_cast<size_t>(m_) + static_cast<size_t>(y2);
    }
    return dst;
}

std::vector<int> Portrait::apply(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) > depth_)
        throw InputError("word longer than portrait depth");
    std::vector<int> out;
    out.reserve(word.size());
    size_t src = 0;
    for (size_t t = 0; t < word.size(); ++t) {
        int y = word[t];
        if (y < 0 || y >= m_) throw InputError("letter out of range");
        out.push_back(perm_at(static_cast<int>(t), src)(y));
        src = src * static_cast<size_t>(m_) + static_cast<size_t>(y);
    }
    return out;
}

Portrait Portrait::then(const Portrait& other) const {
    if (m_ != other.m_ || depth_ != other.depth_)
        throw InputError("portrait shape mismatch");
    std::vector<Permutation> out(perms_.size());
    // image[idx]: image under *this of the level-t vertex idx, maintained level by level
    std::vector<size_t> image = {0};
    size_t off = 0;
    for (int t = 0; t < depth_; ++t) {
        const size_t width = image.size();
        std::vector<size_t> next;
        if (t + 1 < depth_) next.resize(width * static_cast<size_t>(m_));
        for (size_t idx = 0; idx < width; ++idx) {
            const Permutation& p = perms_[off + idx];
            const Permutation& q = other.perms_[off + image[idx]];
            out[off + idx] = p.then(q);
            if (t + 1 < depth_)
                for (int y = 0; y < m_; ++y)
                    next[idx * static_cast<size_t>(m_) + static_cast<size_t>(y)] =
                        image[idx] * static_cast<size_t>(m_) + static_cast<size_t>(p(y));
        }
        off += width;
        image = std::move(next);
    }
    return Portrait(m_, depth_, std::move(out));
}

Portrait Portrait::inverse() const {
    std::vector<Permutation> out(perms_.size());
    std::vector<size_t> image = {0};
    size_t off = 0;
    for (int t = 0; t < depth_; ++t) {
        const size_t width = image.size();
        std::vector<size_t> next;
        if (t + 1 < depth_) next.resize(width * static_cast<size_t>(m_));
        for (size_t idx = 0; idx < width; ++idx) {
            const Permutation& p = perms_[off + idx];
            out[off + image[idx]] = p.inverse();
            if (t + 1 < depth_)
                for (int y = 0; y < m_; ++y)
                    next[idx * static_cast<size_t>(m_) + static_cast<size_t>(y)] =
                        image[idx] * static_cast<size_t>(m_) + static_cast<size_t>(p(y));
        }
        off += width;
        image = std::move(next);
    }
    return Portrait(m_, depth_, std::move(out));
}

bool Portrait::is_identity() const {
    for (const auto& p : perms_)
        if (!p.is_identity()) return false;
    return true;
}

int Portrait::order(int guard) const {
    Portrait acc = *this;
    int ord = 1;
    while (!acc.is_identity()) {
        acc = acc.then(*this);
        ++ord;
        if (ord > guard) throw ResourceError("portrait order exceeds guard");
    }
    return ord;
}

size_t Portrait::hash() const {
    // FNV-1a over the image bytes
    size_t h = 1469598103934665603ull;
    auto mix = [&h](uint8_t b) {
        h ^= b;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint8_t>(m_));
    mix(static_cast<uint8_t>(depth_));
    for (const auto& p : perms_)
        for (uint8_t b : p.images()) mix(b);
    return h;
}

std::string Portrait::to_string() const {
    std::ostringstream out;
    size_t off = 0, width = 1;
    for (int t = 0; t < depth_; ++t) {
        if (t > 0) out << " | ";
        for (size_t i = 0; i < width; ++i) {
            if (i > 0) out << ' ';
            out << perms_[off + i].cycle_string();
        }
        off += width;
        width *= static_cast<size_t>(m_);
    }
    return out.str();
}

} // namespace selfsim
