"""Worked examples: vector products, planes through points, mutual
positions of lines and planes, and exact distances and volumes."""

from exactmath import (
    Plane,
    Vec3,
    cross,
    dot,
    line_plane_relation,
    mixed,
    plane_three_points,
    point_plane_distance,
    tetra_volume,
    triangle_area,
)
from exactmath.geometry import line_plane_intersection_line, line_point_dir


def main():
    print("== Vector products ==")
    a, b = Vec3(1, 2, 2), Vec3(2, -2, 1)
    print(f"  a . b = {dot(a, b)}, a x b = {cross(a, b)}")
    print(f"  mixed product of i, j, k: {mixed(Vec3(1,0,0), Vec3(0,1,0), Vec3(0,0,1))}")

    print("\n== Plane through three points ==")
    plane = plane_three_points(Vec3(1, 1, 0), Vec3(-2, 0, 4), Vec3(2, 3, -1))
    print(f"  {plane}")

    print("\n== Pyramid height ==")
    base = plane_three_points(Vec3(3, 5, 3), Vec3(-2, 11, -5), Vec3(1, -1, 4))
    d = point_plane_distance(Vec3(0, 6, 4), base)
    print(f"  d^2 = {d['d_sq']}, so the height is {d['d']:.10g}")

    print("\n== Intersection of two planes ==")
    line = line_plane_intersection_line(
        Plane(2, -1, -1, -4), Plane(2, -3, -2, 7))
    print(f"  {line}")

    print("\n== Line vs plane ==")
    pierce = line_plane_relation(
        line_point_dir(Vec3(1, 2, 3), Vec3(3, -2, 1)), Plane(6, -4, 2, 7))
    print(f"  kind: {pierce['kind']}, P = {pierce['point']}, "
          f"sin angle = {pierce['sin_angle']:.10g}")

    print("\n== Areas and volumes ==")
    print(f"  triangle area: {triangle_area(Vec3(1,2,3), Vec3(-2,5,4), Vec3(2,5,8)):.10g}")
    print(f"  tetrahedron volume: "
          f"{tetra_volume(Vec3(3,1,-2), Vec3(-4,2,3), Vec3(1,5,-1), Vec3(-5,-1,2))}")


if __name__ == "__main__":
    main()
