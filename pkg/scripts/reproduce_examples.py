"""Print the degree 6 and 7 extremal polynomials and their extremal values."""

from typreal import certify, compute_extremal, principal_vector, upper_bound


def show(n):
    p = compute_extremal(n)
    z = principal_vector(n).z
    print(f"N = {n} ({p.parity}, root {p.root_kind} = {p.root:.5f})")
    for k, a in enumerate(p.coeffs, start=1):
        print(f"  alpha_{k} = {a:.5f}")
    print(f"  J_N   = {p.j_value:.5f}   bound = {upper_bound(n):.5f}")
    print(f"  min sine poly on grid = {certify.grid_min(p.coeffs):.2e}")
    print(f"  sum-of-squares residual = {certify.sos_residual(p.coeffs, z, 4096):.2e}")


if __name__ == "__main__":
    show(6)
    print()
    show(7)
