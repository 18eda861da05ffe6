// generated by tools/oracle/gen_hyp2f1_refs.py; do not edit by hand

pub const GAMMA_REFS: [(f64, f64, f64, f64); 17] = [
    (1.0, 0.0, 1.0, 0.0),
    (2.0, 0.0, 1.0, 0.0),
    (3.0, 0.0, 2.0, 0.0),
    (4.0, 0.0, 6.0, 0.0),
    (5.0, 0.0, 24.0, 0.0),
    (0.5, 0.0, 1.772453850905516, 0.0),
    (1.5, 2.0, 0.16591510893899095, 0.14946347326641948),
    (-0.5, 0.0, -3.544907701811032, 0.0),
    (-3.7, 0.0, 0.2516439959024227, 0.0),
    (0.5, 3.0, 0.021445670552430646, 0.006865364837261678),
    (-2.0, 4.0, -0.00012687285242227956, -3.842307699536187e-06),
    (6.0, -2.0, -80.04767342563402, 25.885035554405302),
    (12.3, 0.7, -12809874.885170149, 80663096.79995227),
    (-3.9999999999, 0.0, 416666632.25426984, 0.0),
    (0.5, -3.0, 0.021445670552430646, -0.006865364837261678),
    (-6.3, -2.1, 2.2569718538500665e-07, -9.268495684150992e-06),
    (1e-13, 0.0, 9999999999999.422, 0.0),
];

pub const GAMMA_INV_REFS: [(f64, f64, f64, f64); 20] = [
    (1.0, 0.0, 1.0, 0.0),
    (2.0, 0.0, 1.0, 0.0),
    (3.0, 0.0, 0.5, 0.0),
    (4.0, 0.0, 0.16666666666666666, 0.0),
    (5.0, 0.0, 0.041666666666666664, 0.0),
    (0.5, 0.0, 0.5641895835477563, 0.0),
    (1.5, 2.0, 3.3271421816145437, -2.9972329204700716),
    (-0.5, 0.0, -0.28209479177387814, 0.0),
    (-3.7, 0.0, 3.973867909758353, 0.0),
    (0.5, 3.0, 42.29498020969168, -13.539817708865499),
    (-2.0, 4.0, -7874.684438861944, 238.48254432044092),
    (6.0, -2.0, -0.01130989845481768, -0.0036572846041758706),
    (12.3, 0.7, -1.9203401436376262e-09, -1.2092279142741884e-08),
    (-3.9999999999, 0.0, 2.400000198215422e-09, 0.0),
    (0.5, -3.0, 42.29498020969168, 13.539817708865499),
    (-6.3, -2.1, 2625.7307555098528, 107828.43451800664),
    (1e-13, 0.0, 1.0000000000000577e-13, 0.0),
    (-3.0, 0.0, 0.0, 0.0),
    (0.0, 0.0, 0.0, 0.0),
    (-7.0, 0.0, 0.0, 0.0),
];

pub const LOG_GAMMA_REFS: [(f64, f64, f64, f64); 8] = [
    (11.0, 0.0, 15.104412573075516, 0.0),
    (0.5, 0.0, 0.5723649429247001, 0.0),
    (1.5, 2.0, -1.4991963725850954, 0.7332806816909979),
    (3.3, -1.2, 0.7395337740021257, -1.275723827492527),
    (-2.5, 0.4, -0.6712684153790344, -8.982366885720555),
    (0.5, 14.0, -21.07221004192388, 22.949779692295984),
    (-0.3, -0.2, 1.225936030137985, 2.7893797308484634),
    (7.0, 0.0, 6.579251212010101, 0.0),
];

pub const DIGAMMA_REFS: [(f64, f64, f64, f64); 6] = [
    (1.0, 0.0, -0.5772156649015329, 0.0),
    (0.5, 0.0, -1.9635100260214235, 0.0),
    (2.5, 0.0, 0.7031566406452432, 0.0),
    (1.5, 2.0, 0.7998337581729537, 1.1001971357298588),
    (7.0, -3.0, 1.9688856880857164, -0.4317918223673651),
    (0.5, 0.8, -0.307004035335537, 1.550317389036363),
];

pub const H_REFS: [(f64, f64, f64, f64, f64, f64); 10] = [
    (1.0, 0.0, 0.0, 0.0, -0.5772156649015329, 0.0),
    (1.0, 0.0, 1e-13, 0.0, -0.577215664901434, 0.0),
    (0.5, 0.0, 0.1, 0.0, -1.5981324531975005, 0.0),
    (2.5, 0.3, 0.05, -0.03, 0.7404624294303493, 0.1345604539878205),
    (-3.2, 0.1, 0.0, 0.0, 4.6502250549778115, 2.326763648431281),
    (-3.2, 0.1, 0.07, 0.02, 4.9613873600789855, 4.557957637239159),
    (-5.999999999, 0.2, 0.05, 0.0, 0.5784703204406999, 5.818405355192301),
    (-0.3, -0.4, 0.0, 0.1, 0.6676232198296097, -2.801850510195609),
    (0.7, 0.2, 1e-11, -1e-11, -1.1002508266737963, 0.5348330417906586),
    (-11.4, 0.0, -0.1, 0.0, 2.5790927224703974, 0.0),
];

pub const G_REFS: [(f64, f64, f64, f64, f64, f64); 12] = [
    (-2.0, 0.0, 0.0, 0.0, -2.0, 0.0),
    (1.0, 0.0, 1.0, 0.0, 0.0, 0.0),
    (0.7, 0.2, 1e-11, 0.0, -0.972496552928365, 0.21407846096015604),
    (-10.0, 0.0, 1e-13, 0.0, -3628799.9999991464, 0.0),
    (-10.000000000000025, 0.0, 1.3e-13, 0.0, -3628799.999999315, 0.0),
    (-5.0, 0.0, 1e-09, 1e-09, 119.99999979526588, -2.04734120235541e-07),
    (2.5, -0.3, 0.08, 0.0, 0.5574253538876854, 0.013606307990226546),
    (-4.2, 0.4, 0.0, 0.07, -62.359393893736325, 37.41315620527528),
    (0.5, 0.0, 0.5, 0.0, -0.8716208329044874, 0.0),
    (-7.0, 0.0, 0.0, 0.0, 5040.0, 0.0),
    (-1.0, 1e-14, -1e-13, 0.0, 1.0000000000000422, -8.455686701965644e-15),
    (3.0, 4.0, 0.1, -0.1, -5.062139487159452, 7.932402148685415),
];

pub const G_IDENTITY_REFS: [(f64, f64, f64, f64, f64, f64); 7] = [
    (0.7, 0.2, 1e-11, 0.0, -9.72496552928365e-12, 2.1407846096015603e-12),
    (-3.0, 1e-13, 1e-13, 1e-14, 5.999999999999405e-13, 5.99999999998342e-14),
    (-10.0, 0.0, 1e-13, 0.0, -3.628799999999147e-07, 0.0),
    (2.2, -1.1, 0.1, 0.0, 0.11115389447107725, 0.004757482728063993),
    (-6.5, 0.3, 0.0, 0.1, 66.20808223803206, -303.2752187926017),
    (1.0, 0.0, 0.05, 0.05, -0.02886717323010225, -0.025570946133506762),
    (-0.5, -0.5, 1e-07, 0.0, -1.367593334025929e-08, 1.5385344985054767e-07),
];
