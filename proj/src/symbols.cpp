#include "rsym/symbols.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace rsym {

void SymbolConfig::validate() const {
    if (r < 1) throw usage_error("config: r must be positive");
    if (static_cast<int>(s.size()) != r) throw usage_error("config: s must have r entries");
    if (alpha < 0 || alpha >= r) throw usage_error("config: alpha must satisfy 0 <= alpha < r");
    for (int k = 0; k < r; ++k) {
        if (s[k] < 0 || e < 0) throw usage_error("config: e and s must be non-negative");
        if (s[k] > e) throw usage_error("config: s_k <= e is required");
    }
}

std::vector<int> defect_alignment(const Defect& d, const SymbolConfig& cfg) {
    if (static_cast<int>(d.size()) != cfg.r) throw usage_error("defect length must be r");
    int sum = std::accumulate(d.begin(), d.end(), 0);
    if (((sum - cfg.alpha) % cfg.r + cfg.r) % cfg.r != 0)
        throw usage_error("defect incompatible with alpha: sum d_k != alpha (mod r)");
    std::vector<int> dp(cfg.r);
    int mn = 0;
    for (int k = 0; k < cfg.r; ++k) {
        dp[k] = d[k] - (k < cfg.alpha ? 1 : 0);
        mn = k == 0 ? dp[k] : std::min(mn, dp[k]);
    }
    for (int& x : dp) x -= mn;
    return dp;
}

int f_of_defect(const Defect& d, const SymbolConfig& cfg) {
    std::vector<int> dp = defect_alignment(d, cfg);
    int f = 0;
    for (int k = 0; k < cfg.r; ++k) {
        int x = dp[k];
        f += k < cfg.alpha ? x * (x - 1) / 2 : x * (x + 1) / 2;
    }
    return f;
}

int Symbol::total_entries() const {
    int t = 0;
    for (const auto& row : rows) t += static_cast<int>(row.size());
    return t;
}

std::vector<int> Symbol::entry_multiset() const {
    std::vector<int> m;
    for (const auto& row : rows) m.insert(m.end(), row.begin(), row.end());
    std::sort(m.rbegin(), m.rend());
    return m;
}

std::vector<int> Symbol::aligned_multiset(int target) const {
    Symbol s = *this;
    while (s.total_entries() < target) s = shift(s);
    if (s.total_entries() != target)
        throw invariant_error("multiset alignment target unreachable");
    return s.entry_multiset();
}

std::string Symbol::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < rows.size(); ++k) {
        if (k) os << " | ";
        for (size_t j = 0; j < rows[k].size(); ++j) {
            if (j) os << ",";
            os << rows[k][j];
        }
    }
    os << ")";
    return os.str();
}

Symbol lambda_zero(const std::vector<int>& row_lengths, const SymbolConfig& cfg) {
    cfg.validate();
    if (static_cast<int>(row_lengths.size()) != cfg.r)
        throw usage_error("lambda_zero: row-length tuple must have r entries");
    Symbol sym;
    sym.config = cfg;
    sym.rows.resize(cfg.r);
    for (int k = 0; k < cfg.r; ++k) {
        int mk = row_lengths[k];
        sym.rows[k].resize(mk);
        for (int i = 0; i < mk; ++i) sym.rows[k][i] = cfg.s[k] + (mk - 1 - i) * cfg.e;
    }
    // defect/rank/source are those of the empty multipartition at this shape
    int mn = row_lengths.empty() ? 0 : *std::min_element(row_lengths.begin(), row_lengths.end());
    sym.defect.resize(cfg.r);
    for (int k = 0; k < cfg.r; ++k) sym.defect[k] = row_lengths[k] - mn;
    sym.source.assign(cfg.r, Partition{});
    sym.rank = 0;
    return sym;
}

Symbol shift(const Symbol& sym) {
    Symbol out = sym;
    for (int k = 0; k < sym.config.r; ++k) {
        for (int& a : out.rows[k]) a += sym.config.e;
        out.rows[k].push_back(sym.config.s[k]);
    }
    return out;
}

Symbol symbol_of(const MultiPartition& mp, const Defect& d, const SymbolConfig& cfg) {
    cfg.validate();
    if (static_cast<int>(mp.size()) != cfg.r) throw usage_error("multipartition must have r components");
    std::vector<int> dp = defect_alignment(d, cfg);
    // minimal m with m >= l(lambda^(k)) for all k
    int m = 0;
    for (const Partition& p : mp) m = std::max(m, part_length(p));
    Symbol sym;
    sym.config = cfg;
    sym.rows.resize(cfg.r);
    for (int k = 0; k < cfg.r; ++k) {
        int mk = m + (k < cfg.alpha ? 1 : 0);  // m-bullet
        std::vector<int>& row = sym.rows[k];
        row.resize(mk);
        for (int i = 0; i < mk; ++i) {
            int lam = i < part_length(mp[k]) ? mp[k][i] : 0;
            row[i] = lam + cfg.s[k] + (mk - 1 - i) * cfg.e + dp[k] * cfg.e;
        }
        // phi tail: s_k + (d'_k - 1)e, ..., s_k + e, s_k
        for (int i = dp[k] - 1; i >= 0; --i) row.push_back(cfg.s[k] + i * cfg.e);
    }
    sym.defect = d;
    sym.source = mp;
    sym.rank = mp_size(mp) + f_of_defect(d, cfg);
    return sym;
}

MultiPartition rpartition_of(const Symbol& sym) {
    const SymbolConfig& cfg = sym.config;
    cfg.validate();
    // validate (1.1.1)
    for (int k = 0; k < cfg.r; ++k) {
        const auto& row = sym.rows[k];
        for (size_t i = 0; i + 1 < row.size(); ++i)
            if (row[i] - row[i + 1] < cfg.e) throw usage_error("malformed symbol: row gap < e");
        if (!row.empty() && row.back() < cfg.s[k])
            throw usage_error("malformed symbol: tail below s_k");
    }
    // defect from row lengths
    std::vector<int> mlen(cfg.r);
    for (int k = 0; k < cfg.r; ++k) mlen[k] = static_cast<int>(sym.rows[k].size());
    int mn = *std::min_element(mlen.begin(), mlen.end());
    Defect d(cfg.r);
    for (int k = 0; k < cfg.r; ++k) d[k] = mlen[k] - mn;
    std::vector<int> dp = defect_alignment(d, cfg);
    MultiPartition mp(cfg.r);
    for (int k = 0; k < cfg.r; ++k) {
        int mk = mlen[k] - dp[k];  // m-bullet length
        if (mk < 0) throw usage_error("malformed symbol: rows shorter than defect tail");
        for (int i = 0; i < mk; ++i) {
            int lam = sym.rows[k][i] - cfg.s[k] - (mk - 1 - i) * cfg.e - dp[k] * cfg.e;
            if (lam < 0) throw usage_error("malformed symbol: negative part");
            if (lam > 0) mp[k].push_back(lam);
        }
        // validate the phi tail
        for (int i = 0; i < dp[k]; ++i) {
            int expect = cfg.s[k] + (dp[k] - 1 - i) * cfg.e;
            if (sym.rows[k][mk + i] != expect)
                throw usage_error("malformed symbol: phi tail mismatch");
        }
        for (size_t i = 0; i + 1 < mp[k].size(); ++i)
            if (mp[k][i] < mp[k][i + 1]) throw usage_error("malformed symbol: source not a partition");
    }
    return mp;
}

MultiPartition theta_map(const MultiPartition& mp, const Defect& d, const SymbolConfig& cfg) {
    std::vector<int> dp = defect_alignment(d, cfg);
    MultiPartition out(cfg.r);
    for (int k = 0; k < cfg.r; ++k) {
        int delta = k < cfg.alpha ? 0 : 1;
        int len = std::max(part_length(mp[k]), dp[k] + delta - 1);
        for (int j = 1; j <= len; ++j) {
            int lam = j <= part_length(mp[k]) ? mp[k][j - 1] : 0;
            int add = std::max(dp[k] + delta - j, 0);
            if (lam + add > 0) out[k].push_back(lam + add);
        }
    }
    return out;
}

namespace {

// sum over unordered pairs of distinct positions of min(entries)
Int pair_min_sum(const std::vector<int>& entries, bool ordered) {
    // sorted decreasing: min of a pair is the later element
    std::vector<int> v = entries;
    std::sort(v.rbegin(), v.rend());
    Int s = 0;
    for (size_t j = 0; j < v.size(); ++j) s += Int(v[j]) * static_cast<long>(j);
    if (ordered) s *= 2;
    return s;
}

}  // namespace

int a_value(const Symbol& sym) {
    const SymbolConfig& cfg = sym.config;
    int total = sym.total_entries();
    if (((total - cfg.alpha) % cfg.r + cfg.r) % cfg.r != 0)
        throw invariant_error("total entry count incompatible with alpha");
    int m = (total - cfg.alpha) / cfg.r;
    std::vector<int> base_lengths(cfg.r);
    for (int k = 0; k < cfg.r; ++k) base_lengths[k] = m + (k < cfg.alpha ? 1 : 0);
    Symbol base = lambda_zero(base_lengths, cfg);
    Int a = pair_min_sum(sym.entry_multiset(), cfg.ordered_pairs) -
            pair_min_sum(base.entry_multiset(), cfg.ordered_pairs);
    return static_cast<int>(a.get_si());
}

bool similar(const Symbol& a, const Symbol& b) {
    if (!(a.config == b.config)) return false;
    int ta = a.total_entries(), tb = b.total_entries();
    int t = std::max(ta, tb);
    return a.aligned_multiset(t) == b.aligned_multiset(t);
}

int SymbolTable::block_rank(int defect_index) const {
    return n - f_of_defect(defects[defect_index], config);
}

SymbolTable build_table(int n, const SymbolConfig& cfg, std::vector<Defect> defects,
                        TieBreak tie_break) {
    cfg.validate();
    std::sort(defects.begin(), defects.end());
    defects.erase(std::unique(defects.begin(), defects.end()), defects.end());

    SymbolTable table;
    table.config = cfg;
    table.n = n;
    table.defects = defects;
    table.tie_break = tie_break;

    struct Entry {
        Symbol sym;
        int a;
        int defect_index;
        int source_index;
        std::vector<int> key_multiset;
    };
    std::vector<Entry> entries;
    for (size_t di = 0; di < defects.size(); ++di) {
        int f = f_of_defect(defects[di], cfg);
        if (f > n) continue;  // Z_{n,d} empty: contributes nothing
        auto mps = enumerate_multipartitions(n - f, cfg.r);
        for (size_t si = 0; si < mps.size(); ++si) {
            Entry e;
            e.sym = symbol_of(mps[si], defects[di], cfg);
            e.a = a_value(e.sym);
            e.defect_index = static_cast<int>(di);
            e.source_index = static_cast<int>(si);
            entries.push_back(std::move(e));
        }
    }
    if (entries.empty()) return table;

    int tmax = 0;
    for (const Entry& e : entries) tmax = std::max(tmax, e.sym.total_entries());
    for (Entry& e : entries) e.key_multiset = e.sym.aligned_multiset(tmax);

    // similarity classes: equal aligned multisets
    std::map<std::vector<int>, std::vector<int>> by_multiset;
    for (size_t i = 0; i < entries.size(); ++i) by_multiset[entries[i].key_multiset].push_back(static_cast<int>(i));

    struct Class {
        std::vector<int> members;  // indices into entries
        int a;
        Defect min_defect;
        std::vector<int> multiset;
    };
    std::vector<Class> classes;
    for (auto& [ms, members] : by_multiset) {
        Class c;
        c.members = members;
        c.a = entries[members[0]].a;
        for (int i : members)
            if (entries[i].a != c.a) throw invariant_error("a-value not constant on similarity class");
        c.min_defect = entries[members[0]].sym.defect;
        for (int i : members) c.min_defect = std::min(c.min_defect, entries[i].sym.defect);
        c.multiset = ms;
        classes.push_back(std::move(c));
    }

    bool alt = tie_break == TieBreak::Alt;
    auto class_less = [&](const Class& x, const Class& y) {
        if (x.a != y.a) return x.a > y.a;  // larger a earlier
        auto kx = std::tie(x.min_defect, x.multiset);
        auto ky = std::tie(y.min_defect, y.multiset);
        return alt ? ky < kx : kx < ky;
    };
    std::sort(classes.begin(), classes.end(), class_less);
    auto member_less = [&](int i, int j) {
        auto ki = std::tie(entries[i].sym.defect, entries[i].source_index);
        auto kj = std::tie(entries[j].sym.defect, entries[j].source_index);
        return alt ? kj < ki : ki < kj;
    };
    for (Class& c : classes) std::sort(c.members.begin(), c.members.end(), member_less);

    table.block_indices.assign(defects.size(), {});
    int pos = 0;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        int begin = pos;
        for (int i : classes[ci].members) {
            table.symbols.push_back(entries[i].sym);
            table.a_values.push_back(entries[i].a);
            table.class_of.push_back(static_cast<int>(ci));
            table.defect_of.push_back(entries[i].defect_index);
            table.block_indices[entries[i].defect_index].push_back(pos);
            ++pos;
        }
        table.classes.emplace_back(begin, pos);
    }
    table.index_in_block.assign(table.size(), -1);
    for (const auto& block : table.block_indices)
        for (size_t j = 0; j < block.size(); ++j) table.index_in_block[block[j]] = static_cast<int>(j);
    return table;
}

std::pair<SymbolConfig, std::vector<Defect>> symplectic_defects(int n, bool bad_characteristic) {
    SymbolConfig cfg;
    cfg.r = 2;
    cfg.alpha = 1;
    if (bad_characteristic) {
        cfg.e = 4;
        cfg.s = {0, 2};
    } else {
        cfg.e = 2;
        cfg.s = {0, 1};
    }
    std::vector<Defect> D;
    for (int d = 1;; d += 2) {
        int f = (d - 1) * (d - 2) / 2;  // alignment d' = (d-1, 0)
        if (f > n) break;
        D.push_back({d, 0});
    }
    for (int d = 1;; d += 2) {
        int f = (d + 1) * (d + 2) / 2;  // alignment d' = (0, d+1)
        if (f > n) break;
        D.push_back({0, d});
    }
    std::sort(D.begin(), D.end());
    return {cfg, D};
}

long sp_unipotent_class_count(int n) {
    long count = 0;
    for (const Partition& p : enumerate_partitions(2 * n)) {
        bool ok = true;
        size_t i = 0;
        while (i < p.size()) {
            size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            if (p[i] % 2 == 1 && (j - i) % 2 == 1) {
                ok = false;
                break;
            }
            i = j;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace rsym
