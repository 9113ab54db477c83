#include "cyclefree/perm.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace cyclefree {

bool is_perm(const Perm& p) {
    size_t n = p.size();
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || static_cast<size_t>(v) >= n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return r;
}

std::vector<int> cycle_lengths(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> lens;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            ++len;
            j = static_cast<size_t>(p[j]);
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
}

int perm_sign(const Perm& p) {
    int transpositions = 0;
    for (int len : cycle_lengths(p)) transpositions += len - 1;
    return (transpositions % 2 == 0) ? 1 : -1;
}

bool is_single_cycle(const Perm& p) {
    int big = 0;
    for (int len : cycle_lengths(p))
        if (len >= 2) ++big;
    return big == 1;
}

bool adjacent(const Perm& p, const Perm& q) { return is_single_cycle(compose(p, inverse(q))); }

PermSet make_permset(int n, std::vector<Perm> members) {
    for (const Perm& p : members) {
        if (static_cast<int>(p.size()) != n || !is_perm(p))
            throw FormatError("permset: member is not a permutation of the stated n");
    }
    std::sort(members.begin(), members.end());
    for (size_t i = 1; i < members.size(); ++i)
        if (members[i] == members[i - 1]) throw FormatError("permset: duplicate member");
    PermSet s;
    s.n = n;
    s.members = std::move(members);
    return s;
}

std::string perm_line(const Perm& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ' ';
        os << p[i] + 1;
    }
    return os.str();
}

std::string encode_permset(const PermSet& s) {
    std::ostringstream os;
    os << "PERMSET v1\n";
    os << "n=" << s.n << " count=" << s.members.size() << "\n";
    for (const Perm& p : s.members) os << perm_line(p) << "\n";
    return os.str();
}

PermSet decode_permset(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "PERMSET v1")
        throw FormatError("permset: missing PERMSET v1 header");
    if (!std::getline(in, line)) throw FormatError("permset: missing parameter line");
    int n = 0;
    std::uint64_t count = 0;
    {
        std::istringstream is(line);
        std::string tn, tc;
        if (!(is >> tn >> tc)) throw FormatError("permset: bad parameter line");
        std::string rest;
        if (is >> rest) throw FormatError("permset: bad parameter line");
        if (tn.rfind("n=", 0) != 0 || tc.rfind("count=", 0) != 0)
            throw FormatError("permset: bad parameter line");
        try {
            n = std::stoi(tn.substr(2));
            count = std::stoull(tc.substr(6));
        } catch (const std::exception&) {
            throw FormatError("permset: bad parameter line");
        }
    }
    if (n < 1) throw FormatError("permset: bad n");
    std::vector<Perm> members;
    members.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) throw FormatError("permset: truncated member list");
        std::istringstream is(line);
        Perm p(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            int v = 0;
            if (!(is >> v)) throw FormatError("permset: bad member line");
            if (v < 1 || v > n) throw FormatError("permset: image out of range");
            p[static_cast<size_t>(j)] = v - 1;
        }
        int extra = 0;
        if (is >> extra) throw FormatError("permset: trailing tokens on member line");
        members.push_back(std::move(p));
    }
    while (std::getline(in, line))
        if (!line.empty()) throw FormatError("permset: trailing content");
    PermSet s = make_permset(n, std::move(members));
    return s;
}

PermSet decode_permset(const std::string& text) {
    std::istringstream is(text);
    return decode_permset(is);
}

} // namespace cyclefree
