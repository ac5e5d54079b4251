"""Coxeter matrices of Dynkin quivers and periodic orthogonal chains in K0.

Run: python demos/03_quiver_shadows.py
"""

from eulertwist.quiverk0 import Quiver, coxeter_order, euler_form, quiver_report

for q in (Quiver.A(3), Quiver.A(4), Quiver.D(4), Quiver.D(5)):
    K = euler_form(q)
    order, sign = coxeter_order(K.coxeter)
    rep = quiver_report(q.kind, q.n)
    print(f"{q.name}: Coxeter matrix C has C^{order} = {'+' if sign > 0 else '-'}Id, "
          f"orthogonal chain least period {rep.data['least_period']}, "
          f"{len(rep.checks)} checks {'pass' if rep.passed else 'FAIL'}")

print("\nEuler form and Coxeter matrix of A3:")
K = euler_form(Quiver.A(3))
print(" E =", K.space.gram.to_json())
print(" C =", K.coxeter.to_json())
