#include "spherebasis/cells.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace sphb {

namespace {

// Visit every r-subset of {0,...,n-1} as an ascending index vector, in
// lexicographic order.
template <typename Fn>
void for_each_combination(int n, int r, Fn&& fn) {
    if (r < 0 || r > n) return;
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(static_cast<const std::vector<int>&>(idx));
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < r; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

int cube_symbol_rank(char c) {
    switch (c) {
        case '0': return 0;
        case '1': return 1;
        default: return 2;  // '*'
    }
}

}  // namespace

std::string to_string(Family family) {
    return family == Family::cube ? "cube" : "simplex";
}

Family family_from_string(std::string_view text) {
    if (text == "cube") return Family::cube;
    if (text == "simplex") return Family::simplex;
    throw std::invalid_argument("unknown family '" + std::string(text) +
                                "' (expected 'cube' or 'simplex')");
}

Cell Cell::cube(std::string word) {
    if (word.empty())
        throw std::invalid_argument("cube cell word must be nonempty");
    for (std::size_t i = 0; i < word.size(); ++i) {
        const char c = word[i];
        if (c != '0' && c != '1' && c != '*')
            throw ParseError("invalid symbol '" + std::string(1, c) +
                                 "' in cube cell word (expected 0, 1 or *)",
                             i + 1);
    }
    Cell cell;
    cell.family_ = Family::cube;
    cell.word_ = std::move(word);
    return cell;
}

Cell Cell::simplex(std::vector<int> vertices) {
    if (vertices.empty())
        throw std::invalid_argument("simplex cell needs at least one vertex");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 1)
            throw std::invalid_argument("simplex vertices must be >= 1");
        if (i > 0 && vertices[i] <= vertices[i - 1])
            throw std::invalid_argument("simplex vertices must be strictly ascending");
    }
    Cell cell;
    cell.family_ = Family::simplex;
    cell.verts_ = std::move(vertices);
    return cell;
}

Cell Cell::empty(Family family) {
    Cell cell;
    cell.family_ = family;
    cell.empty_ = true;
    return cell;
}

int Cell::dim() const noexcept {
    if (empty_) return -1;
    if (family_ == Family::cube)
        return static_cast<int>(std::count(word_.begin(), word_.end(), '*'));
    return static_cast<int>(verts_.size()) - 1;
}

const std::string& Cell::word() const {
    if (family_ != Family::cube || empty_)
        throw std::logic_error("word() called on a non-cube or empty cell");
    return word_;
}

const std::vector<int>& Cell::vertices() const {
    if (family_ != Family::simplex || empty_)
        throw std::logic_error("vertices() called on a non-simplex or empty cell");
    return verts_;
}

std::string Cell::text() const { return format_cell(*this); }

bool Cell::operator==(const Cell& other) const {
    return family_ == other.family_ && empty_ == other.empty_ &&
           word_ == other.word_ && verts_ == other.verts_;
}

bool Cell::operator<(const Cell& other) const {
    if (family_ != other.family_) return family_ < other.family_;
    if (empty_ != other.empty_) return empty_;  // the empty cell sorts first
    if (empty_) return false;
    if (family_ == Family::cube) {
        return std::lexicographical_compare(
            word_.begin(), word_.end(), other.word_.begin(), other.word_.end(),
            [](char a, char b) { return cube_symbol_rank(a) < cube_symbol_rank(b); });
    }
    return std::lexicographical_compare(verts_.begin(), verts_.end(),
                                        other.verts_.begin(), other.verts_.end());
}

Cell parse_cell(std::string_view text, const Ambient& ambient) {
    if (ambient.family == Family::cube) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c != '0' && c != '1' && c != '*')
                throw ParseError("invalid symbol '" + std::string(1, c) +
                                     "' in cube cell word (expected 0, 1 or *)",
                                 i + 1);
        }
        const auto n = static_cast<std::size_t>(ambient.n);
        if (text.size() != n)
            throw ParseError("cube cell word has length " + std::to_string(text.size()) +
                                 ", expected " + std::to_string(n),
                             text.size() < n ? text.size() + 1 : n + 1);
        return Cell::cube(std::string(text));
    }

    // simplex: "{v1,v2,...}" with strictly ascending vertices in [1, n+1]
    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_spaces();
    if (pos >= text.size() || text[pos] != '{')
        throw ParseError("simplex cell must start with '{'", pos + 1);
    ++pos;
    std::vector<int> verts;
    skip_spaces();
    if (pos < text.size() && text[pos] == '}')
        throw ParseError("simplex cell needs at least one vertex", pos + 1);
    while (true) {
        skip_spaces();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw ParseError("expected a vertex number", pos + 1);
        long value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > ambient.n + 1)
                throw ParseError("vertex out of range (ambient has vertices 1.." +
                                     std::to_string(ambient.n + 1) + ")",
                                 start + 1);
        }
        if (value < 1)
            throw ParseError("vertex out of range (vertices start at 1)", start + 1);
        if (!verts.empty() && value <= verts.back())
            throw ParseError("vertices must be strictly ascending", start + 1);
        verts.push_back(static_cast<int>(value));
        skip_spaces();
        if (pos >= text.size())
            throw ParseError("unterminated simplex cell (missing '}')", pos + 1);
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == '}') {
            ++pos;
            break;
        }
        throw ParseError("expected ',' or '}' in simplex cell", pos + 1);
    }
    skip_spaces();
    if (pos != text.size())
        throw ParseError("trailing characters after simplex cell", pos + 1);
    return Cell::simplex(std::move(verts));
}

std::string format_cell(const Cell& cell) {
    if (cell.family() == Family::cube)
        return cell.is_empty_cell() ? std::string() : cell.word();
    if (cell.is_empty_cell()) return "{}";
    std::string out = "{";
    const auto& verts = cell.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(verts[i]);
    }
    out += '}';
    return out;
}

bool belongs_to(const Cell& cell, const Ambient& ambient) {
    if (cell.family() != ambient.family) return false;
    if (cell.is_empty_cell()) return true;
    if (ambient.family == Family::cube)
        return cell.word().size() == static_cast<std::size_t>(ambient.n);
    return cell.vertices().back() <= ambient.n + 1;
}

std::vector<Cell> faces(const Cell& cell, int j) {
    const int d = cell.dim();
    if (j < -1 || j > d)
        throw std::domain_error("face dimension " + std::to_string(j) +
                                " out of range [-1, " + std::to_string(d) + "]");
    if (j == -1) return {Cell::empty(cell.family())};

    std::vector<Cell> out;
    if (cell.family() == Family::cube) {
        const std::string& w = cell.word();
        std::vector<int> stars;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == '*') stars.push_back(static_cast<int>(i));
        const int fix = d - j;  // free coordinates to pin down
        for_each_combination(d, fix, [&](const std::vector<int>& combo) {
            for (unsigned mask = 0; mask < (1u << fix); ++mask) {
                std::string face = w;
                for (int t = 0; t < fix; ++t)
                    face[static_cast<std::size_t>(stars[static_cast<std::size_t>(
                        combo[static_cast<std::size_t>(t)])])] =
                        (mask >> t & 1u) ? '1' : '0';
                out.push_back(Cell::cube(std::move(face)));
            }
        });
    } else {
        const auto& verts = cell.vertices();
        const int count = static_cast<int>(verts.size());
        for_each_combination(count, j + 1, [&](const std::vector<int>& combo) {
            std::vector<int> sub;
            sub.reserve(combo.size());
            for (int i : combo) sub.push_back(verts[static_cast<std::size_t>(i)]);
            out.push_back(Cell::simplex(std::move(sub)));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> cofaces(const Cell& cell, const Ambient& ambient) {
    if (!belongs_to(cell, ambient))
        throw std::domain_error("cell " + format_cell(cell) + " is not a face of the ambient " +
                                to_string(ambient.family) + " of dimension " +
                                std::to_string(ambient.n));
    const int d = cell.dim();
    if (d < 0)
        throw std::domain_error("cofaces of the empty cell are not defined");
    if (d >= ambient.n)
        throw std::domain_error("cell dimension must be at most n-1 for cofaces");

    std::vector<Cell> out;
    if (ambient.family == Family::cube) {
        const std::string& w = cell.word();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == '*') continue;
            std::string up = w;
            up[i] = '*';
            out.push_back(Cell::cube(std::move(up)));
        }
    } else {
        const auto& verts = cell.vertices();
        for (int v = 1; v <= ambient.n + 1; ++v) {
            if (std::binary_search(verts.begin(), verts.end(), v)) continue;
            std::vector<int> up = verts;
            up.insert(std::upper_bound(up.begin(), up.end(), v), v);
            out.push_back(Cell::simplex(std::move(up)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> enumerate_cells(const Ambient& ambient, int j) {
    if (j < 0 || j > ambient.n)
        throw std::domain_error("cell dimension " + std::to_string(j) +
                                " out of range [0, " + std::to_string(ambient.n) + "]");
    std::vector<Cell> out;
    if (ambient.family == Family::cube) {
        const int n = ambient.n;
        const int fixed = n - j;
        for_each_combination(n, j, [&](const std::vector<int>& starpos) {
            for (unsigned mask = 0; mask < (1u << fixed); ++mask) {
                std::string w(static_cast<std::size_t>(n), '0');
                std::size_t next_star = 0;
                int bit = 0;
                for (int p = 0; p < n; ++p) {
                    if (next_star < starpos.size() && starpos[next_star] == p) {
                        w[static_cast<std::size_t>(p)] = '*';
                        ++next_star;
                    } else {
                        w[static_cast<std::size_t>(p)] = (mask >> bit & 1u) ? '1' : '0';
                        ++bit;
                    }
                }
                out.push_back(Cell::cube(std::move(w)));
            }
        });
        std::sort(out.begin(), out.end());
    } else {
        for_each_combination(ambient.n + 1, j + 1, [&](const std::vector<int>& combo) {
            std::vector<int> verts;
            verts.reserve(combo.size());
            for (int i : combo) verts.push_back(i + 1);
            out.push_back(Cell::simplex(std::move(verts)));
        });
        // combinations arrive in ascending-vector order already
    }
    return out;
}

}  // namespace sphb
