// @generated by tools/gen_goldens.py; do not edit by hand.

use crate::selftest::Golden;

/// Reference values from the hypergeometric series in mpmath at 200 and 320 digits.
#[rustfmt::skip]
pub const GOLDENS: &[Golden] = &[
    // 1.0
    Golden { x: 1.0, m: 0, tau: 7.0, value: 1.0 },
    // 0.0
    Golden { x: 1.0, m: 3, tau: 2.0, value: 0.0 },
    // 8922330815.373539038076791
    Golden { x: 0.0, m: 4, tau: 10.0, value: 8922330815.373539 },
    // 21282611944573242475.43015
    Golden { x: 0.0, m: 0, tau: 30.0, value: 2.1282611944573243e+19 },
    // 133.659731448074440843237
    Golden { x: -0.5, m: 2, tau: 2.0, value: 133.65973144807444 },
    // 210161537670360.4174068652
    Golden { x: -0.9, m: 3, tau: 10.0, value: 210161537670360.4 },
    // 1.343316353561469821008529e+41
    Golden { x: -0.3, m: 15, tau: 25.0, value: 1.3433163535614699e+41 },
    // 25727.03215051932510052695
    Golden { x: -0.7, m: 0, tau: 5.0, value: 25727.032150519324 },
    // 1.508585781764989498445931e+211
    Golden { x: -0.95, m: 40, tau: 100.0, value: 1.5085857817649896e+211 },
    // 1.148925923718408248014134
    Golden { x: 0.5, m: 0, tau: 0.5, value: 1.1489259237184082 },
    // 8898816571840981255.141619
    Golden { x: 0.3, m: 7, tau: 20.0, value: 8.898816571840981e+18 },
    // 808.7089785122414252032259
    Golden { x: 0.9, m: 12, tau: 3.0, value: 808.7089785122414 },
    // 2.954177926027003620901591e+64
    Golden { x: 0.1, m: 1, tau: 100.0, value: 2.9541779260270036e+64 },
    // 3.630717253240583125664543e+35
    Golden { x: 0.5, m: 30, tau: 10.0, value: 3.630717253240583e+35 },
    // 1.375696304752331628396185e+92
    Golden { x: 0.9, m: 40, tau: 100.0, value: 1.3756963047523316e+92 },
    // 194909806303098201276335.2
    Golden { x: 0.5, m: 30, tau: 0.0, value: 1.949098063030982e+23 },
    // 4.924942181959702112398908e+78
    Golden { x: 0.2, m: 25, tau: 60.0, value: 4.924942181959702e+78 },
    // 3.376998057211119622495556e+31
    Golden { x: 1.5, m: 30, tau: 10.0, value: 3.3769980572111195e+31 },
    // 1.291737360107664369140023e+70
    Golden { x: 1.1, m: 50, tau: 40.0, value: 1.2917373601076643e+70 },
    // 10820493417887010765.37956
    Golden { x: 3.0, m: 20, tau: 5.0, value: 1.082049341788701e+19 },
    // 6.596626355592725745879686e+34
    Golden { x: 2.5, m: 25, tau: 25.0, value: 6.596626355592726e+34 },
    // -1.044243071670307122005866e+67
    Golden { x: 1.8, m: 40, tau: 45.0, value: -1.0442430716703072e+67 },
    // 7.280783472995643537144652e+43
    Golden { x: 10.0, m: 30, tau: 30.0, value: 7.280783472995644e+43 },
    // 3.143643981342843469076859e+28
    Golden { x: 50.0, m: 25, tau: 10.0, value: 3.1436439813428437e+28 },
    // 4.356352030262822756440038e+95
    Golden { x: 20.0, m: 60, tau: 30.0, value: 4.356352030262823e+95 },
    // -235.4999318220774167540448
    Golden { x: 5.0, m: 2, tau: 80.0, value: -235.49993182207743 },
    // 0.08939825831079183384711123
    Golden { x: 1.5, m: 0, tau: 60.0, value: 0.08939825831079183 },
    // -2.003142796090630016231924
    Golden { x: 3.0, m: 1, tau: 100.0, value: -2.00314279609063 },
    // 15831701.14885809353367481
    Golden { x: 2.0, m: 5, tau: 50.0, value: 15831701.148858093 },
    // 0.5433190759960173758896081
    Golden { x: 2.0, m: 1, tau: 1.0, value: 0.5433190759960174 },
    // 1773.581019273151914433993
    Golden { x: 1.5, m: 5, tau: 5.0, value: 1773.581019273152 },
    // 0.684421557290623432473195
    Golden { x: 3.0, m: 0, tau: 0.5, value: 0.6844215572906235 },
    // -328182351106.3605163780721
    Golden { x: 50.0, m: 10, tau: 20.0, value: -328182351106.36053 },
];
