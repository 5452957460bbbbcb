#include "udgfvs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "udgfvs/errors.hpp"
#include "udgfvs/rng.hpp"

namespace udgfvs {

namespace {

constexpr double kDiameterTolerance = 1e-9;

double clamp_gap(double d, double half) {
    // distance from a coordinate offset to the interval [-half, half]
    const double a = std::abs(d);
    return a > half ? a - half : 0.0;
}

struct BucketKey {
    std::int64_t x;
    std::int64_t y;
    friend bool operator==(const BucketKey&, const BucketKey&) = default;
};

struct BucketHash {
    std::size_t operator()(const BucketKey& k) const {
        return std::hash<std::int64_t>{}(k.x * 0x9E3779B97F4A7C15LL ^ k.y);
    }
};

}  // namespace

const char* shape_name(Shape s) { return s == Shape::Disk ? "disk" : "square"; }

Shape parse_shape(const std::string& name) {
    if (name == "disk") return Shape::Disk;
    if (name == "square") return Shape::Square;
    throw InputError("unsupported shape '" + name + "'");
}

FatObject FatObject::square(Point c, double half_side) {
    return {c, half_side, half_side * std::sqrt(2.0), Shape::Square};
}

void ObjectSet::validate() const {
    if (!(alpha > 0 && alpha <= 1)) throw InputError("alpha must lie in (0, 1]");
    if (!(gamma >= 1)) throw InputError("gamma must be >= 1");
    if (objects.empty()) return;
    double smallest = INFINITY;
    double largest = 0;
    for (const auto& o : objects) {
        if (!std::isfinite(o.center.x) || !std::isfinite(o.center.y)) {
            throw InputError("object center is not finite");
        }
        if (!(o.inner_radius > 0 && o.inner_radius <= o.outer_radius)) {
            throw InputError("object radii must satisfy 0 < inner <= outer");
        }
        if (o.shape == Shape::Disk && o.inner_radius != o.outer_radius) {
            throw InputError("disk with inner radius != outer radius");
        }
        if (o.fatness() < alpha - kDiameterTolerance) throw InputError("object thinner than alpha");
        smallest = std::min(smallest, o.diameter());
        largest = std::max(largest, o.diameter());
    }
    if (std::abs(smallest - 1.0) > kDiameterTolerance) {
        throw InputError("smallest object diameter must be 1");
    }
    if (largest / smallest > gamma + kDiameterTolerance) {
        throw InputError("diameter ratio exceeds gamma");
    }
}

bool objects_intersect(const FatObject& a, const FatObject& b) {
    const double dx = a.center.x - b.center.x;
    const double dy = a.center.y - b.center.y;
    if (a.shape == Shape::Disk && b.shape == Shape::Disk) {
        const double r = a.outer_radius + b.outer_radius;
        return dx * dx + dy * dy <= r * r;
    }
    if (a.shape == Shape::Square && b.shape == Shape::Square) {
        const double h = a.inner_radius + b.inner_radius;
        return std::abs(dx) <= h && std::abs(dy) <= h;
    }
    const FatObject& disk = a.shape == Shape::Disk ? a : b;
    const FatObject& square = a.shape == Shape::Disk ? b : a;
    const double gx = clamp_gap(disk.center.x - square.center.x, square.inner_radius);
    const double gy = clamp_gap(disk.center.y - square.center.y, square.inner_radius);
    return gx * gx + gy * gy <= disk.outer_radius * disk.outer_radius;
}

Graph build_intersection_graph(const ObjectSet& objs) {
    const auto& obj = objs.objects;
    std::vector<Edge> edges;
    if (obj.empty()) return Graph::from_edge_list(0, edges);

    double bucket = 0;
    for (const auto& o : obj) bucket = std::max(bucket, o.diameter());
    std::unordered_map<BucketKey, std::vector<Vertex>, BucketHash> buckets;
    const auto key_of = [bucket](const Point& p) {
        return BucketKey{static_cast<std::int64_t>(std::floor(p.x / bucket)),
                         static_cast<std::int64_t>(std::floor(p.y / bucket))};
    };
    for (std::size_t i = 0; i < obj.size(); ++i) {
        buckets[key_of(obj[i].center)].push_back(static_cast<Vertex>(i));
    }
    for (std::size_t i = 0; i < obj.size(); ++i) {
        const BucketKey k = key_of(obj[i].center);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = buckets.find({k.x + dx, k.y + dy});
                if (it == buckets.end()) continue;
                for (Vertex j : it->second) {
                    if (static_cast<std::size_t>(j) <= i) continue;
                    if (objects_intersect(obj[i], obj[static_cast<std::size_t>(j)])) {
                        edges.emplace_back(static_cast<Vertex>(i), j);
                    }
                }
            }
        }
    }
    return Graph::from_edge_list(obj.size(), edges);
}

std::size_t GridClassification::heavy_vertex_count() const {
    std::size_t count = 0;
    for (const auto& c : heavy_cells) count += members.at(c).size();
    return count;
}

Cell grid_cell(Point p) {
    return {static_cast<std::int64_t>(std::floor(2 * p.x)), static_cast<std::int64_t>(std::floor(2 * p.y))};
}

GridClassification classify_grid(const ObjectSet& objs) {
    GridClassification gc;
    gc.cell_of.reserve(objs.size());
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const Cell c = grid_cell(objs.objects[i].center);
        gc.cell_of.push_back(c);
        gc.members[c].push_back(static_cast<Vertex>(i));
    }
    for (const auto& [cell, verts] : gc.members) {
        (verts.size() >= 3 ? gc.heavy_cells : gc.light_cells).insert(cell);
    }
    return gc;
}

ObjectSet random_udg(std::size_t n, double density, std::uint64_t seed) {
    if (n < 1) throw InputError("random_udg needs n >= 1");
    if (!(density > 0)) throw InputError("random_udg needs density > 0");
    Rng rng(seed);
    const double side = std::sqrt(static_cast<double>(n) / density);
    ObjectSet set;
    set.objects.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = rng.uniform() * side;
        const double y = rng.uniform() * side;
        set.objects.push_back(FatObject::disk({x, y}, 0.5));
    }
    return set;
}

namespace {

constexpr double kStep = 0.9;        // consecutive path centers
constexpr double kRowGap = 3 * kStep;  // two connector disks between rows
constexpr double kHubLift = 0.3;     // hub sits this far above its path disk

struct Snake {
    std::vector<Point> path;
    std::vector<std::size_t> eligible;  // path indices that may carry a hub
};

Snake make_snake(std::size_t length, std::size_t row_width) {
    Snake s;
    for (std::size_t row = 0; s.path.size() < length; ++row) {
        const double y = static_cast<double>(row) * kRowGap;
        const bool forward = row % 2 == 0;
        for (std::size_t i = 0; i < row_width && s.path.size() < length; ++i) {
            const std::size_t col = forward ? i : row_width - 1 - i;
            if (i >= 2 && i + 3 <= row_width) s.eligible.push_back(s.path.size());
            s.path.push_back({static_cast<double>(col) * kStep, y});
        }
        const double x_end = forward ? static_cast<double>(row_width - 1) * kStep : 0.0;
        for (int c = 1; c <= 2 && s.path.size() < length; ++c) {
            s.path.push_back({x_end, y + c * kStep});
        }
    }
    // a hub needs both path neighbours present
    std::erase_if(s.eligible, [&](std::size_t i) { return i == 0 || i + 1 >= s.path.size(); });
    return s;
}

}  // namespace

PlantedInstance planted_yes_instance(std::size_t k, std::size_t path_len, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t row_width = 8 + static_cast<std::size_t>(rng.below(8));
    std::size_t length = std::max<std::size_t>(path_len, 2);
    while (true) {
        Snake snake = make_snake(length, row_width);
        std::vector<std::size_t> order = snake.eligible;
        Rng pick(seed ^ (0xA5A5A5A5ULL + length));
        pick.shuffle(order.begin(), order.end());
        std::vector<std::size_t> chosen;
        for (std::size_t idx : order) {
            if (chosen.size() == k) break;
            const bool clear = std::all_of(chosen.begin(), chosen.end(), [idx](std::size_t c) {
                return (idx > c ? idx - c : c - idx) >= 4;
            });
            if (clear) chosen.push_back(idx);
        }
        if (chosen.size() < k) {
            length += row_width;
            continue;
        }
        std::sort(chosen.begin(), chosen.end());
        PlantedInstance out;
        out.k = k;
        for (const Point& p : snake.path) out.objects.objects.push_back(FatObject::disk(p, 0.5));
        for (std::size_t idx : chosen) {
            const Point base = snake.path[idx];
            out.hubs.push_back(static_cast<Vertex>(out.objects.objects.size()));
            out.objects.objects.push_back(FatObject::disk({base.x, base.y + kHubLift}, 0.5));
        }
        return out;
    }
}

}  // namespace udgfvs
