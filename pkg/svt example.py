from fractions import Fraction
from svt import * #TwistContext, L, G, to_text and the rest

ctx = TwistContext(1, order=2) #m=1, series truncated after t^2

print(to_text(delta_closed(L(1), ctx))) #twisted coproduct of L_1
print(to_text(antipode_closed(G(Fraction(1, 2)), ctx))) #antipode of G_{1/2}

#the closed form agrees with conjugating by the twist
assert delta_closed(L(1), ctx) == twisted_direct('delta', L(1), ctx)

report = run_suite(SuiteSpec('lemma34', m_values=[1, 2], order=2))
print(report.to_text()) #ends in PASSED or FAILED
