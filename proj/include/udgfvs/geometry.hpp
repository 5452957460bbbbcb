#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <string>
#include <vector>

#include "udgfvs/graph.hpp"

namespace udgfvs {

enum class Shape { Disk, Square };

const char* shape_name(Shape s);
Shape parse_shape(const std::string& name);

struct Point {
    double x = 0;
    double y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

// An object sandwiched between two concentric disks. For a disk both radii
// coincide; for an axis-aligned square inner_radius is the half side and
// outer_radius the half diagonal.
struct FatObject {
    Point center;
    double inner_radius = 0.5;
    double outer_radius = 0.5;
    Shape shape = Shape::Disk;

    double diameter() const { return 2 * outer_radius; }
    double fatness() const { return inner_radius / outer_radius; }

    static FatObject disk(Point c, double radius) { return {c, radius, radius, Shape::Disk}; }
    static FatObject square(Point c, double half_side);

    friend bool operator==(const FatObject&, const FatObject&) = default;
};

struct ObjectSet {
    std::vector<FatObject> objects;
    double alpha = 1.0;
    double gamma = 1.0;

    std::size_t size() const { return objects.size(); }

    // Throws InputError unless every object is well formed, fatness >= alpha,
    // the smallest diameter is 1 and the diameter ratio is <= gamma.
    void validate() const;

    friend bool operator==(const ObjectSet&, const ObjectSet&) = default;
};

// Closed-set intersection test: touching boundaries intersect.
bool objects_intersect(const FatObject& a, const FatObject& b);

// Grid-bucketed construction; only cells within the largest diameter are probed.
Graph build_intersection_graph(const ObjectSet& objs);

using Cell = std::pair<std::int64_t, std::int64_t>;

// Cells are axis-parallel squares of side 1/2 (diameter 1/sqrt 2) anchored at
// the origin.
struct GridClassification {
    std::vector<Cell> cell_of;                   // vertex -> cell
    std::map<Cell, std::vector<Vertex>> members;  // cell -> vertices, sorted
    std::set<Cell> heavy_cells;                  // >= 3 centers
    std::set<Cell> light_cells;

    std::size_t heavy_vertex_count() const;
};

Cell grid_cell(Point p);
GridClassification classify_grid(const ObjectSet& objs);

// n disks of radius 1/2, uniform in a square of side sqrt(n / density).
ObjectSet random_udg(std::size_t n, double density, std::uint64_t seed);

struct PlantedInstance {
    ObjectSet objects;
    std::size_t k = 0;
    std::vector<Vertex> hubs;  // object ids of the hub disks
};

// A snake-shaped path of unit-diameter disks (consecutive centers 0.9 apart)
// with k hub disks, each overlapping three consecutive path disks. Deleting
// the hubs leaves a path, and the hub triangles are pairwise disjoint, so the
// minimum FVS is exactly k. path_len is raised to the smallest length that
// fits k hubs.
PlantedInstance planted_yes_instance(std::size_t k, std::size_t path_len, std::uint64_t seed);

}  // namespace udgfvs
