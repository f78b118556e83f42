#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurmzf {

/// Error for malformed user input (bad shapes, files, flags). CLI maps it to exit 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Error for enumeration work exceeding the configured budget. CLI maps it to exit 2.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Box of a Young diagram in matrix coordinates, 1-based.
struct Cell {
    int row = 0;
    int col = 0;

    /// Diagonal index j - i; constant along each diagonal.
    int diagonal() const { return col - row; }

    auto operator<=>(const Cell&) const = default;
};

/// Integer partition (weakly decreasing positive parts) with its Young diagram.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw input_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw input_error("partition parts must be weakly decreasing");
        }
    }

    /// Parses the text form "3,2,1". An empty string is the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                throw input_error("empty part in partition '" + text + "'");
            try {
                parts.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw input_error("cannot parse partition '" + text + "'");
            }
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 1-based; 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int size() const {
        int total = 0;
        for (int p : parts_) total += p;
        return total;
    }

    bool has_cell(int i, int j) const { return i >= 1 && j >= 1 && j <= part(i); }
    bool has_cell(const Cell& c) const { return has_cell(c.row, c.col); }

    /// Cells of D(lambda) in row-major order.
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int i = 1; i <= rows(); ++i)
            for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
        return out;
    }

    Partition conjugate() const {
        std::vector<int> conj;
        if (!parts_.empty()) {
            conj.resize(static_cast<std::size_t>(parts_[0]));
            for (int j = 1; j <= parts_[0]; ++j) {
                int count = 0;
                for (int p : parts_)
                    if (p >= j) ++count;
                conj[static_cast<std::size_t>(j - 1)] = count;
            }
        }
        return Partition(std::move(conj));
    }

    /// Removable boxes: cells (i, lambda_i) with lambda_{i+1} < lambda_i or i = r.
    std::vector<Cell> corners() const {
        std::vector<Cell> out;
        for (int i = 1; i <= rows(); ++i)
            if (part(i + 1) < part(i)) out.push_back({i, part(i)});
        return out;
    }

    /// Hook length of a cell: arm + leg + 1.
    int hook_length(int i, int j) const {
        if (!has_cell(i, j)) throw input_error("hook_length: cell outside shape");
        int arm = part(i) - j;
        int leg = 0;
        for (int k = i + 1; k <= rows(); ++k)
            if (part(k) >= j) ++leg;
        return arm + leg + 1;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    bool operator==(const Partition& other) const = default;
    /// Lexicographic on part vectors; used only for canonical orderings.
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

  private:
    std::vector<int> parts_;
};

/// Variable regions whose exponents must have real part > 1 for convergence.
enum class RegionKind { Corners, RowEnds, HookH, HookE };

inline RegionKind parse_region_kind(const std::string& name) {
    if (name == "W") return RegionKind::Corners;
    if (name == "WR") return RegionKind::RowEnds;
    if (name == "WH") return RegionKind::HookH;
    if (name == "WE") return RegionKind::HookE;
    throw input_error("unknown region kind '" + name + "' (expected W, WR, WH or WE)");
}

inline std::vector<Cell> region_cells(const Partition& lambda, RegionKind kind) {
    std::vector<Cell> out;
    switch (kind) {
        case RegionKind::Corners:
            return lambda.corners();
        case RegionKind::RowEnds:
            for (int i = 1; i <= lambda.rows(); ++i) out.push_back({i, lambda.part(i)});
            return out;
        case RegionKind::HookH: {
            // Cells lying on a diagonal through some row-end cell (i, lambda_i).
            std::set<int> marked;
            for (int i = 1; i <= lambda.rows(); ++i) marked.insert(i - lambda.part(i));
            for (const Cell& c : lambda.cells())
                if (marked.count(c.row - c.col)) out.push_back(c);
            return out;
        }
        case RegionKind::HookE: {
            // Conjugate convention: transpose of HookH on the conjugate shape.
            const Partition conj = lambda.conjugate();
            std::set<int> marked;
            for (int i = 1; i <= conj.rows(); ++i) marked.insert(i - conj.part(i));
            for (const Cell& c : lambda.cells())
                if (marked.count(c.col - c.row)) out.push_back(c);
            return out;
        }
    }
    throw input_error("unknown region kind");
}

/// Diagonal classes I(d) with at least two cells, ordered by diagonal index.
/// Cells within a class are ordered by increasing row (topmost first).
inline std::vector<std::vector<Cell>> multi_cell_diagonals(const Partition& lambda) {
    std::vector<std::vector<Cell>> out;
    if (lambda.empty()) return out;
    int lo = 1 - lambda.rows();
    int hi = lambda.part(1) - 1;
    for (int d = lo; d <= hi; ++d) {
        std::vector<Cell> klass;
        for (int i = 1; i <= lambda.rows(); ++i) {
            int j = i + d;
            if (lambda.has_cell(i, j)) klass.push_back({i, j});
        }
        if (klass.size() >= 2) out.push_back(std::move(klass));
    }
    return out;
}

}  // namespace schurmzf
