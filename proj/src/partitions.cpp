#include "rsym/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rsym {

int part_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

int part_length(const Partition& p) { return static_cast<int>(p.size()); }

int mp_size(const MultiPartition& mp) {
    int s = 0;
    for (const Partition& p : mp) s += part_size(p);
    return s;
}

int n_statistic(const Partition& p) {
    int s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

std::vector<MultiPartition> enumerate_multipartitions(int n, int r) {
    std::vector<MultiPartition> out;
    std::vector<int> comp(r, 0);
    MultiPartition cur(r);
    std::function<void(int)> fill = [&](int k) {
        if (k == r) {
            out.push_back(cur);
            return;
        }
        for (const Partition& p : enumerate_partitions(comp[k])) {
            cur[k] = p;
            fill(k + 1);
        }
        cur[k].clear();
    };
    // compositions of n into r parts, lexicographically decreasing
    std::function<void(int, int)> comps = [&](int k, int rem) {
        if (k == r - 1) {
            comp[k] = rem;
            fill(0);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            comp[k] = v;
            comps(k + 1, rem - v);
        }
    };
    if (r == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    comps(0, n);
    return out;
}

Partition union_partitions(const Partition& a, const Partition& b) {
    Partition u = a;
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.rbegin(), u.rend());
    return u;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (part_size(a) != part_size(b)) throw usage_error("dominance compares equal sizes only");
    int sa = 0, sb = 0;
    size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

Int z_partition(const Partition& p) {
    Int z = 1;
    int i = 0;
    while (i < static_cast<int>(p.size())) {
        int j = i;
        while (j < static_cast<int>(p.size()) && p[j] == p[i]) ++j;
        int mult = j - i;
        for (int k = 1; k <= mult; ++k) z *= Int(p[i]) * k;
        i = j;
    }
    return z;
}

Int z_multipartition(const MultiPartition& mp, int r) {
    Int z = 1;
    int len = 0;
    for (const Partition& p : mp) {
        z *= z_partition(p);
        len += part_length(p);
    }
    for (int i = 0; i < len; ++i) z *= r;
    return z;
}

RatFun z_multipartition_t(const MultiPartition& mp, int r) {
    RatFun z(UniPoly(Rat(z_multipartition(mp, r))));
    UniPoly one(Cyclo(Rat(1), r));
    for (int k = 0; k < r; ++k) {
        Cyclo zk = Cyclo::zeta(r, k);  // zeta^{k-1} for 1-based color k+1
        for (int part : mp[k]) {
            UniPoly factor = one - UniPoly::monomial(part, zk);
            z /= RatFun(factor);
        }
    }
    return z;
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

std::string multipartition_str(const MultiPartition& mp) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < mp.size(); ++i) {
        if (i) os << ";";
        os << partition_str(mp[i]);
    }
    os << "]";
    return os.str();
}

MultiPartition DoublePartitionArray::row_merge() const {
    MultiPartition m(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m[i] = union_partitions(m[i], cells[i][j]);
    return m;
}

MultiPartition DoublePartitionArray::column_merge() const {
    MultiPartition m(r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) m[j] = union_partitions(m[j], cells[i][j]);
    return m;
}

int DoublePartitionArray::size() const {
    int s = 0;
    for (const auto& row : cells)
        for (const Partition& p : row) s += part_size(p);
    return s;
}

Int DoublePartitionArray::z_order() const {
    Int z = 1;
    int len = 0;
    for (const auto& row : cells)
        for (const Partition& p : row) {
            z *= z_partition(p);
            len += part_length(p);
        }
    for (int i = 0; i < len; ++i) z *= r;
    return z;
}

std::vector<DoublePartitionArray> enumerate_double_arrays(int n, int r) {
    int ncells = r * r;
    std::vector<DoublePartitionArray> out;
    DoublePartitionArray cur;
    cur.r = r;
    cur.cells.assign(r, std::vector<Partition>(r));
    std::function<void(int, int)> rec = [&](int cell, int rem) {
        if (cell == ncells) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            for (const Partition& p : enumerate_partitions(v)) {
                cur.cells[cell / r][cell % r] = p;
                rec(cell + 1, rem - v);
            }
        }
        cur.cells[cell / r][cell % r].clear();
    };
    rec(0, n);
    return out;
}

}  // namespace rsym
