#include "specturan/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace specturan {

int enumeration_ceiling(int r) {
    if (const char* env = std::getenv("SPECTURAN_CEILING")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (r == 2) return 10;
    if (r == 3) return 7;
    return 6;
}

namespace {

struct Child {
    Hypergraph g;
    CanonicalLabel label;
};

// All (r-1)-subsets of [k], lexicographic.
std::vector<std::vector<int>> stub_combinations(int k, int r) {
    std::vector<std::vector<int>> out;
    const int m = r - 1;
    if (m > k) return out;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = m - 1;
        while (i >= 0 && idx[i] == k - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// One extension step of the orderly generation: all pairwise non-isomorphic
// children of `parent` on one more vertex, each accepted only if the new
// vertex lies in the orbit of the canonical-last vertex (canonical
// construction path), deduplicated per parent, sorted by canonical label.
std::vector<Child> make_children(const Hypergraph& parent, const EnumerationOptions& opts) {
    const int k = parent.n;
    auto stubs = stub_combinations(k, parent.r);
    if (stubs.size() > 30)
        throw std::invalid_argument("enumeration step too wide; lower the order");
    const unsigned long long mask_end = 1ull << stubs.size();

    std::vector<Child> children;
    std::set<CanonicalLabel> seen;
    for (unsigned long long mask = 0; mask < mask_end; ++mask) {
        Hypergraph child;
        child.n = k + 1;
        child.r = parent.r;
        child.edges = parent.edges;
        for (std::size_t b = 0; b < stubs.size(); ++b) {
            if (!(mask >> b & 1ull)) continue;
            std::vector<int> e(stubs[b]);
            e.push_back(k);  // k exceeds every stub vertex, edge stays sorted
            child.edges.push_back(std::move(e));
        }
        std::sort(child.edges.begin(), child.edges.end());

        if (opts.hereditary && opts.predicate && !opts.predicate(child)) continue;

        CanonicalResult canon = canonical_form_full(child);
        if (!seen.insert(canon.label).second) continue;
        if (!std::binary_search(canon.last_orbit.begin(), canon.last_orbit.end(), k)) continue;
        children.push_back({std::move(child), std::move(canon.label)});
    }
    std::sort(children.begin(), children.end(),
              [](const Child& a, const Child& b) { return a.label < b.label; });
    return children;
}

}  // namespace

struct EnumerationStream::Impl {
    int n = 0;
    int r = 2;
    EnumerationOptions opts;

    struct Frame {
        std::vector<Child> children;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    std::vector<std::size_t> last_path;
    bool started = false;

    Impl(int n_, int r_, EnumerationOptions opts_) : n(n_), r(r_), opts(std::move(opts_)) {
        if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
        if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
        int ceiling = opts.ceiling_override > 0 ? opts.ceiling_override : enumeration_ceiling(r);
        if (n > ceiling)
            throw std::invalid_argument("order " + std::to_string(n) +
                                        " exceeds the enumeration ceiling " +
                                        std::to_string(ceiling));
    }

    Hypergraph root() const { return Hypergraph{0, r, {}}; }

    void start() {
        started = true;
        stack.clear();
        stack.push_back(Frame{make_children(root(), opts), 0});
    }

    void resume(const std::string& token) {
        started = true;
        stack.clear();
        last_path.clear();
        std::vector<std::size_t> path;
        std::istringstream is(token);
        std::string part;
        while (std::getline(is, part, '.')) {
            if (part.empty()) throw std::invalid_argument("bad checkpoint token");
            path.push_back(std::stoull(part));
        }
        if (path.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("checkpoint token depth mismatch");

        Hypergraph parent = root();
        for (int depth = 0; depth < n; ++depth) {
            Frame frame{make_children(parent, opts), 0};
            if (path[depth] >= frame.children.size())
                throw std::invalid_argument("checkpoint token index out of range");
            frame.next = path[depth] + 1;
            Hypergraph child = frame.children[path[depth]].g;
            stack.push_back(std::move(frame));
            if (depth + 1 < n) parent = std::move(child);
        }
        last_path = path;
    }

    std::optional<Hypergraph> next() {
        if (!started) start();
        while (!stack.empty()) {
            Frame& f = stack.back();
            const int order = static_cast<int>(stack.size());
            if (f.next >= f.children.size()) {
                stack.pop_back();
                continue;
            }
            std::size_t idx = f.next++;
            const Child& c = f.children[idx];
            if (order == n) {
                if (!opts.hereditary && opts.predicate && !opts.predicate(c.g)) continue;
                last_path.clear();
                for (const Frame& fr : stack) last_path.push_back(fr.next - 1);
                return c.g;
            }
            stack.push_back(Frame{make_children(c.g, opts), 0});
        }
        return std::nullopt;
    }

    std::string checkpoint() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < last_path.size(); ++i) {
            if (i) os << '.';
            os << last_path[i];
        }
        return os.str();
    }
};

EnumerationStream::EnumerationStream(int n, int r, EnumerationOptions opts)
    : impl_(std::make_unique<Impl>(n, r, std::move(opts))) {}

EnumerationStream::EnumerationStream(int n, int r, EnumerationOptions opts,
                                     const std::string& checkpoint)
    : impl_(std::make_unique<Impl>(n, r, std::move(opts))) {
    if (!checkpoint.empty()) impl_->resume(checkpoint);
}

EnumerationStream::~EnumerationStream() = default;
EnumerationStream::EnumerationStream(EnumerationStream&&) noexcept = default;
EnumerationStream& EnumerationStream::operator=(EnumerationStream&&) noexcept = default;

std::optional<Hypergraph> EnumerationStream::next() { return impl_->next(); }

std::string EnumerationStream::checkpoint() const { return impl_->checkpoint(); }

std::vector<Hypergraph> enumerate_graphs(int n, int r, EnumerationOptions opts) {
    EnumerationStream stream(n, r, std::move(opts));
    std::vector<Hypergraph> out;
    while (auto g = stream.next()) out.push_back(std::move(*g));
    return out;
}

}  // namespace specturan
