#include "wedgelab/coset.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace wedgelab {

namespace {

constexpr int32_t kUndef = -1;

inline int inv_col(int col) { return col ^ 1; }

// Expands a word into a column sequence (2g for x_g, 2g+1 for its inverse),
// freely reduced.
std::vector<int> word_cols(const GroupWord& w, int k) {
    std::vector<int> cols;
    for (const auto& syl : w.letters) {
        if (syl.gen < 0 || syl.gen >= k)
            throw std::invalid_argument("word uses a generator outside the presentation");
        if (syl.exp > 4096 || syl.exp < -4096)
            throw std::invalid_argument("word exponent too large to expand for scanning");
        long e = static_cast<long>(syl.exp);
        int col = e > 0 ? 2 * syl.gen : 2 * syl.gen + 1;
        for (long i = 0; i < (e > 0 ? e : -e); ++i) {
            if (!cols.empty() && cols.back() == inv_col(col))
                cols.pop_back();
            else
                cols.push_back(col);
        }
    }
    return cols;
}

void cyclic_reduce(std::vector<int>& cols) {
    size_t a = 0, b = cols.size();
    while (b - a >= 2 && cols[a] == inv_col(cols[b - 1])) {
        ++a;
        --b;
    }
    cols = std::vector<int>(cols.begin() + static_cast<long>(a),
                            cols.begin() + static_cast<long>(b));
}

class Enumerator {
  public:
    Enumerator(const Presentation& p, const std::vector<GroupWord>& subgens,
               const EnumLimits& lim, EnumStrategy strat)
        : limits_(lim),
          strategy_(strat),
          k_(static_cast<int>(p.generators.size())),
          ncols_(2 * static_cast<int>(p.generators.size())) {
        if (k_ < 1) throw std::invalid_argument("enumerate: presentation has no generators");
        for (const auto& r : p.relators) {
            std::vector<int> cols = word_cols(r, k_);
            cyclic_reduce(cols);
            if (!cols.empty()) relators_.push_back(std::move(cols));
        }
        for (const auto& w : subgens) {
            std::vector<int> cols = word_cols(w, k_);
            if (!cols.empty()) subgen_cols_.push_back(std::move(cols));
        }
        if (strategy_ == EnumStrategy::Felsch) build_rotations();
        start_ = std::chrono::steady_clock::now();
    }

    std::vector<int32_t> run() {
        new_coset();
        for (const auto& w : subgen_cols_) {
            scan(0, w, true);
            process_coincidences();
        }
        if (strategy_ == EnumStrategy::HLT)
            run_hlt();
        else
            run_felsch();
        process_coincidences();
        compact();
        standardize();
        for (int32_t v : table_)
            if (v == kUndef) throw std::logic_error("enumeration finished with holes");
        return table_;
    }

  private:
    // ---- storage ----
    const EnumLimits limits_;
    const EnumStrategy strategy_;
    const int k_;
    const int ncols_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> subgen_cols_;
    std::vector<std::vector<std::vector<int>>> rotations_;  // per column

    std::vector<int32_t> table_;   // alloc_ rows by ncols_
    std::vector<int32_t> parent_;  // union-find over cosets
    int64_t alloc_ = 0;
    int64_t live_ = 0;
    std::deque<int32_t> dead_queue_;                  // merged cosets to process
    std::vector<std::pair<int32_t, int>> deductions_; // Felsch stack of (coset, col)
    std::chrono::steady_clock::time_point start_;
    int64_t tick_ = 0;

    int32_t& cell(int32_t c, int col) {
        return table_[static_cast<size_t>(c) * static_cast<size_t>(ncols_) +
                      static_cast<size_t>(col)];
    }
    int32_t cellv(int32_t c, int col) const {
        return table_[static_cast<size_t>(c) * static_cast<size_t>(ncols_) +
                      static_cast<size_t>(col)];
    }
    bool is_live(int32_t c) const { return parent_[static_cast<size_t>(c)] == c; }

    int32_t rep(int32_t c) {
        while (parent_[static_cast<size_t>(c)] != c) {
            parent_[static_cast<size_t>(c)] =
                parent_[static_cast<size_t>(parent_[static_cast<size_t>(c)])];
            c = parent_[static_cast<size_t>(c)];
        }
        return c;
    }

    void check_time() {
        if (limits_.max_seconds <= 0) return;
        if ((++tick_ & 0x3ff) != 0) return;
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                        .count();
        if (el > limits_.max_seconds)
            throw LimitExceeded("time", "enumeration ran past " +
                                            std::to_string(limits_.max_seconds) + "s");
    }

    int32_t new_coset() {
        check_time();
        size_t need = static_cast<size_t>(alloc_ + 1) * static_cast<size_t>(ncols_);
        if (need > table_.size()) {
            size_t want = std::max<size_t>(need, table_.size() * 2);
            table_.resize(want, kUndef);
        }
        int32_t c = static_cast<int32_t>(alloc_);
        for (int x = 0; x < ncols_; ++x) cell(c, x) = kUndef;
        parent_.push_back(c);
        ++alloc_;
        ++live_;
        return c;
    }

    void merge(int32_t a, int32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[static_cast<size_t>(b)] = a;
        --live_;
        dead_queue_.push_back(b);
    }

    // Demands a^col = b, reconciling with existing entries; may queue
    // coincidences instead of writing.
    void force_edge(int32_t a, int col, int32_t b) {
        a = rep(a);
        b = rep(b);
        int32_t ta = cellv(a, col);
        if (ta != kUndef) {
            merge(rep(ta), b);
            return;
        }
        int32_t tb = cellv(b, inv_col(col));
        if (tb != kUndef) {
            merge(rep(tb), a);
            return;
        }
        cell(a, col) = b;
        cell(b, inv_col(col)) = a;
        if (strategy_ == EnumStrategy::Felsch) deductions_.emplace_back(a, col);
    }

    void process_coincidences() {
        while (!dead_queue_.empty()) {
            int32_t g = dead_queue_.front();
            dead_queue_.pop_front();
            for (int x = 0; x < ncols_; ++x) {
                int32_t d = cellv(g, x);
                if (d == kUndef) continue;
                if (cellv(d, inv_col(x)) == g) cell(d, inv_col(x)) = kUndef;
                force_edge(rep(g), x, rep(d));
            }
        }
    }

    // Scans word w from coset c, demanding it closes back at c.  With fill,
    // undefined entries spawn new cosets (HLT); without, the scan abandons
    // gaps of length two or more and only closes or deduces.
    void scan(int32_t c, const std::vector<int>& w, bool fill) {
        int32_t f = c, b = c;
        long i = 0, j = static_cast<long>(w.size()) - 1;
        while (true) {
            while (i <= j) {
                int32_t n = cellv(f, w[static_cast<size_t>(i)]);
                if (n == kUndef) break;
                f = n;
                ++i;
            }
            if (i > j) {
                if (f != b) merge(f, b);
                return;
            }
            while (j >= i) {
                int32_t n = cellv(b, inv_col(w[static_cast<size_t>(j)]));
                if (n == kUndef) break;
                b = n;
                --j;
            }
            if (j < i) {
                if (f != b) merge(f, b);
                return;
            }
            if (j == i) {
                force_edge(f, w[static_cast<size_t>(i)], b);
                return;
            }
            if (!fill) return;
            int32_t d = new_coset();
            cell(f, w[static_cast<size_t>(i)]) = d;
            cell(d, inv_col(w[static_cast<size_t>(i)])) = f;
            if (strategy_ == EnumStrategy::Felsch) deductions_.emplace_back(f, w[static_cast<size_t>(i)]);
        }
    }

    // Deduction-free closure pass: rescans every relator everywhere without
    // defining, recovering cosets through coincidences before giving up.
    void lookahead() {
        for (int32_t c = 0; c < alloc_; ++c) {
            check_time();
            if (!is_live(c)) continue;
            for (const auto& r : relators_) {
                scan(c, r, false);
                process_coincidences();
                if (!is_live(c)) break;
            }
        }
    }

    // Renumbers live cosets densely; loop indices the caller holds must be
    // remapped through the returned vector (dead cosets map to -1).
    std::vector<int32_t> compact() {
        std::vector<int32_t> map(static_cast<size_t>(alloc_), -1);
        int32_t next = 0;
        for (int32_t c = 0; c < alloc_; ++c)
            if (is_live(c)) map[static_cast<size_t>(c)] = next++;
        for (int32_t c = 0; c < alloc_; ++c) {
            if (!is_live(c)) continue;
            int32_t nc = map[static_cast<size_t>(c)];
            for (int x = 0; x < ncols_; ++x) {
                int32_t d = cellv(c, x);
                cell(nc, x) = d == kUndef ? kUndef : map[static_cast<size_t>(rep(d))];
            }
        }
        alloc_ = next;
        table_.resize(static_cast<size_t>(alloc_) * static_cast<size_t>(ncols_));
        parent_.resize(static_cast<size_t>(alloc_));
        for (int32_t c = 0; c < alloc_; ++c) parent_[static_cast<size_t>(c)] = c;
        for (auto& dd : deductions_) {
            dd.first = dd.first >= 0 && map[static_cast<size_t>(dd.first)] >= 0
                           ? map[static_cast<size_t>(dd.first)]
                           : -1;
        }
        deductions_.erase(std::remove_if(deductions_.begin(), deductions_.end(),
                                         [](const auto& dd) { return dd.first < 0; }),
                          deductions_.end());
        return map;
    }

    // Remaps a cursor that points at a not-yet-processed row; when that row
    // died, it advances to the next live one (order-preserving compaction
    // keeps already-processed rows below the cursor).
    void remap_cursor(const std::vector<int32_t>& map, int32_t* cursor) {
        int32_t c = *cursor;
        while (c < static_cast<int32_t>(map.size()) && map[static_cast<size_t>(c)] < 0) ++c;
        *cursor = c < static_cast<int32_t>(map.size()) ? map[static_cast<size_t>(c)]
                                                       : static_cast<int32_t>(alloc_);
    }

    // Safe point between row passes: reclaim dead rows when they pile up,
    // and when live cosets run past the budget try a lookahead recovery
    // before giving up loudly.
    void safe_point(int32_t* cursor) {
        if (alloc_ - live_ > std::max<int64_t>(65536, live_))
            remap_cursor(compact(), cursor);
        if (live_ <= limits_.max_cosets) return;
        lookahead();
        remap_cursor(compact(), cursor);
        if (live_ > limits_.max_cosets)
            throw LimitExceeded("cosets", std::to_string(live_) + " live cosets over a budget of " +
                                              std::to_string(limits_.max_cosets));
    }

    void run_hlt() {
        for (int32_t c = 0; c < alloc_; ++c) {
            check_time();
            if (!is_live(c)) continue;
            // The budget is enforced here, before the row's relator pass, so
            // one pass may transiently overshoot by its fill count.
            safe_point(&c);
            if (c >= alloc_ || !is_live(c)) continue;
            for (const auto& r : relators_) {
                scan(c, r, true);
                process_coincidences();
                if (!is_live(c)) break;
            }
            if (!is_live(c)) continue;
            for (int x = 0; x < ncols_; ++x) {
                if (cellv(c, x) != kUndef) continue;
                int32_t d = new_coset();
                cell(c, x) = d;
                cell(d, inv_col(x)) = c;
            }
        }
    }

    void build_rotations() {
        rotations_.assign(static_cast<size_t>(ncols_), {});
        for (int x = 0; x < ncols_; ++x) {
            std::set<std::vector<int>> seen;
            for (const auto& r : relators_)
                for (size_t t = 0; t < r.size(); ++t) {
                    if (r[t] != x) continue;
                    std::vector<int> rot;
                    rot.reserve(r.size());
                    for (size_t u = 0; u < r.size(); ++u) rot.push_back(r[(t + u) % r.size()]);
                    if (seen.insert(rot).second)
                        rotations_[static_cast<size_t>(x)].push_back(std::move(rot));
                }
        }
    }

    void process_deductions() {
        while (true) {
            process_coincidences();
            if (deductions_.empty()) return;
            auto [a, x] = deductions_.back();
            deductions_.pop_back();
            a = rep(a);
            if (cellv(a, x) == kUndef) continue;  // edge dissolved by a coincidence
            bool interrupted = false;
            for (const auto& rot : rotations_[static_cast<size_t>(x)]) {
                scan(a, rot, false);
                if (!dead_queue_.empty()) {
                    interrupted = true;
                    break;
                }
            }
            if (!interrupted) {
                int32_t b = cellv(a, x);  // still live: no merge happened
                for (const auto& rot : rotations_[static_cast<size_t>(inv_col(x))]) {
                    scan(b, rot, false);
                    if (!dead_queue_.empty()) {
                        interrupted = true;
                        break;
                    }
                }
            }
            // A coincidence cut the rotation pass short; requeue the edge so
            // the remaining rotations get scanned after the merge settles.
            if (interrupted) deductions_.emplace_back(a, x);
        }
    }

    void run_felsch() {
        process_deductions();
        int32_t row = 0;
        int col = 0;
        while (row < alloc_) {
            check_time();
            if (!is_live(row)) {
                ++row;
                col = 0;
                continue;
            }
            if (col == ncols_) {
                ++row;
                col = 0;
                continue;
            }
            if (cellv(row, col) != kUndef) {
                ++col;
                continue;
            }
            if (live_ >= limits_.max_cosets) {
                // At the budget with a hole left: a scan-only pass plus the
                // deduction cascade either closes the table or frees room.
                lookahead();
                process_deductions();
                compact();
                row = 0;
                col = 0;
                bool holes = false;
                for (int32_t c = 0; c < alloc_ && !holes; ++c)
                    for (int x = 0; x < ncols_; ++x)
                        if (cellv(c, x) == kUndef) {
                            holes = true;
                            break;
                        }
                if (!holes) return;
                if (live_ >= limits_.max_cosets)
                    throw LimitExceeded("cosets",
                                        std::to_string(live_) + " live cosets at the budget of " +
                                            std::to_string(limits_.max_cosets) +
                                            " with entries still undefined");
                continue;
            }
            int32_t d = new_coset();
            cell(row, col) = d;
            cell(d, inv_col(col)) = row;
            deductions_.emplace_back(row, col);
            process_deductions();
        }
    }

    // Renumbers cosets in breadth-first discovery order from coset 0 with
    // columns tried in order, making the table canonical for the action.
    void standardize() {
        std::vector<int32_t> order(static_cast<size_t>(alloc_), -1);
        std::vector<int32_t> bfs;
        bfs.reserve(static_cast<size_t>(alloc_));
        order[0] = 0;
        bfs.push_back(0);
        for (size_t q = 0; q < bfs.size(); ++q) {
            int32_t c = bfs[q];
            for (int x = 0; x < ncols_; ++x) {
                int32_t d = cellv(c, x);
                if (d == kUndef) throw std::logic_error("standardize: incomplete table");
                if (order[static_cast<size_t>(d)] < 0) {
                    order[static_cast<size_t>(d)] = static_cast<int32_t>(bfs.size());
                    bfs.push_back(d);
                }
            }
        }
        if (bfs.size() != static_cast<size_t>(alloc_))
            throw std::logic_error("standardize: table not connected");
        std::vector<int32_t> out(static_cast<size_t>(alloc_) * static_cast<size_t>(ncols_));
        for (int32_t c = 0; c < alloc_; ++c)
            for (int x = 0; x < ncols_; ++x)
                out[static_cast<size_t>(order[static_cast<size_t>(c)]) *
                        static_cast<size_t>(ncols_) +
                    static_cast<size_t>(x)] = order[static_cast<size_t>(cellv(c, x))];
        table_ = std::move(out);
    }
};

}  // namespace

int32_t CosetTable::apply_word(int32_t coset, const GroupWord& w) const {
    if (coset < 0 || coset >= rows_) throw std::out_of_range("apply_word: coset out of range");
    for (const auto& syl : w.letters) {
        if (syl.gen < 0 || syl.gen >= gens_)
            throw std::out_of_range("apply_word: generator out of range");
        if (syl.exp > 10'000'000 || syl.exp < -10'000'000)
            throw std::invalid_argument("apply_word: exponent too large; reduce it first");
        long e = static_cast<long>(syl.exp);
        int col = e > 0 ? 2 * syl.gen : 2 * syl.gen + 1;
        for (long i = 0; i < (e > 0 ? e : -e); ++i) coset = entry(coset, col);
    }
    return coset;
}

void CosetTable::audit(const Presentation& p) const {
    if (static_cast<int>(p.generators.size()) != gens_)
        throw std::logic_error("table audit: generator count mismatch");
    if (rows_ < 1) throw std::logic_error("table audit: empty table");
    for (int32_t c = 0; c < rows_; ++c)
        for (int x = 0; x < cols(); ++x) {
            int32_t d = entry(c, x);
            if (d < 0 || d >= rows_) throw std::logic_error("table audit: entry out of range");
            if (entry(d, x ^ 1) != c)
                throw std::logic_error("table audit: inverse columns inconsistent");
        }
    for (const auto& r : p.relators) {
        std::vector<int> cols_seq = word_cols(r, gens_);
        for (int32_t c = 0; c < rows_; ++c) {
            int32_t f = c;
            for (int x : cols_seq) f = entry(f, x);
            if (f != c) throw std::logic_error("table audit: relator does not close at coset " +
                                               std::to_string(c));
        }
    }
}

std::string CosetTable::serialize() const {
    std::ostringstream os;
    os << "wedgelab-coset-table 1\n" << gens_ << " " << subgroup_rank_ << " " << rows_ << "\n";
    for (int32_t c = 0; c < rows_; ++c) {
        for (int x = 0; x < cols(); ++x) {
            if (x) os << " ";
            os << entry(c, x);
        }
        os << "\n";
    }
    return os.str();
}

CosetTable CosetTable::deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string magic, version;
    is >> magic >> version;
    if (magic != "wedgelab-coset-table" || version != "1")
        throw std::runtime_error("coset table deserialize: unrecognized header");
    int gens = 0, srank = 0;
    int64_t rows = 0;
    is >> gens >> srank >> rows;
    if (!is || gens < 1 || rows < 1 || rows > (1 << 30) || srank < 0)
        throw std::runtime_error("coset table deserialize: bad dimensions");
    std::vector<int32_t> flat(static_cast<size_t>(rows) * static_cast<size_t>(2 * gens));
    for (auto& v : flat) {
        long long x = 0;
        if (!(is >> x) || x < 0 || x >= rows)
            throw std::runtime_error("coset table deserialize: bad entry");
        v = static_cast<int32_t>(x);
    }
    return from_rows(gens, srank, std::move(flat));
}

CosetTable CosetTable::from_rows(int gens, int subgroup_rank, std::vector<int32_t> flat) {
    if (gens < 1 || flat.empty() || flat.size() % static_cast<size_t>(2 * gens) != 0)
        throw std::invalid_argument("coset table: bad row data");
    CosetTable t;
    t.gens_ = gens;
    t.subgroup_rank_ = subgroup_rank;
    t.rows_ = static_cast<int32_t>(flat.size() / static_cast<size_t>(2 * gens));
    t.table_ = std::move(flat);
    return t;
}

CosetTable enumerate(const Presentation& p, const std::vector<GroupWord>& subgroup_gens,
                     const EnumLimits& limits, EnumStrategy strategy) {
    Enumerator e(p, subgroup_gens, limits, strategy);
    return CosetTable::from_rows(static_cast<int>(p.generators.size()),
                                 static_cast<int>(subgroup_gens.size()), e.run());
}

uint64_t table_cache_key(const Presentation& p, const std::vector<GroupWord>& subgroup_gens) {
    std::string text = p.canonical_text();
    text += "|subgens:";
    for (const auto& w : subgroup_gens) {
        for (const auto& syl : w.letters)
            text += "g" + std::to_string(syl.gen) + "^" + syl.exp.str() + ".";
        text += ";";
    }
    return fnv1a(text);
}

CosetTable enumerate_cached(const Presentation& p, const std::vector<GroupWord>& subgroup_gens,
                            const EnumLimits& limits, const std::string& cache_dir,
                            EnumStrategy strategy) {
    if (cache_dir.empty()) return enumerate(p, subgroup_gens, limits, strategy);
    namespace fs = std::filesystem;
    std::ostringstream name;
    name << std::hex << table_cache_key(p, subgroup_gens) << ".tab";
    fs::path path = fs::path(cache_dir) / name.str();
    if (fs::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        CosetTable t = CosetTable::deserialize(buf.str());
        t.audit(p);  // never trust a cache file blindly
        return t;
    }
    CosetTable t = enumerate(p, subgroup_gens, limits, strategy);
    fs::create_directories(fs::path(cache_dir));
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << t.serialize();
    }
    fs::rename(tmp, path);
    return t;
}

}  // namespace wedgelab
