#include "krect/batched_report.hpp"

#include <algorithm>
#include <map>

namespace krect {

namespace detail {

namespace {

struct Event {
    double x;
    int id;
    bool is_b;  // B events sort before A events at equal x
    int idx;
};

}  // namespace

SweepResult sweep_ne(std::span<const Point> a, std::span<const Point> b, int k) {
    if (k < 1) throw std::invalid_argument("sweep_ne: k must be >= 1");
    SweepResult out;
    out.lists.resize(b.size());

    std::vector<Event> events;
    events.reserve(a.size() + b.size());
    for (size_t i = 0; i < b.size(); ++i) events.push_back({b[i].x, b[i].id, true, (int)i});
    for (size_t i = 0; i < a.size(); ++i) events.push_back({a[i].x, a[i].id, false, (int)i});
    std::sort(events.begin(), events.end(), [](const Event& l, const Event& r) {
        if (l.x != r.x) return l.x < r.x;
        if (l.is_b != r.is_b) return l.is_b;
        return l.id < r.id;
    });

    // Open anchors keyed by (y, id); an anchor leaves once its list is full.
    std::map<std::pair<double, int>, int> active;
    for (const Event& ev : events) {
        if (ev.is_b) {
            active.emplace(std::make_pair(b[ev.idx].y, b[ev.idx].id), ev.idx);
        } else {
            const Point& p = a[ev.idx];
            auto stop = active.upper_bound({p.y, std::numeric_limits<int>::max()});
            for (auto it = active.begin(); it != stop;) {
                std::vector<int>& list = out.lists[it->second];
                list.push_back(ev.idx);
                ++out.report_events;
                if ((int)list.size() == k)
                    it = active.erase(it);
                else
                    ++it;
            }
        }
    }
    return out;
}

}  // namespace detail

namespace {

Point reflected(Point p, Orientation o) {
    if (o == Orientation::NW || o == Orientation::SW) p.x = -p.x;
    if (o == Orientation::SE || o == Orientation::SW) p.y = -p.y;
    return p;
}

}  // namespace

PointSet reflect(const PointSet& ps, Orientation o) {
    std::vector<Point> pts;
    pts.reserve(ps.size());
    for (const Point& p : ps) pts.push_back(reflected(p, o));
    return PointSet(std::move(pts));
}

ReportResult batched_k_extreme(const PointSet& a, const PointSet& b, int k, Orientation o) {
    if (k < 1) throw std::invalid_argument("batched_k_extreme: k must be >= 1");
    std::vector<Point> ra, rb;
    ra.reserve(a.size());
    rb.reserve(b.size());
    for (const Point& p : a) ra.push_back(reflected(p, o));
    for (const Point& p : b) rb.push_back(reflected(p, o));

    detail::SweepResult sw = detail::sweep_ne(ra, rb, k);

    ReportResult out;
    out.report_events = sw.report_events;
    out.lists.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        out.lists[i].reserve(sw.lists[i].size());
        for (int idx : sw.lists[i]) out.lists[i].push_back(a[idx]);
    }
    return out;
}

}  // namespace krect
