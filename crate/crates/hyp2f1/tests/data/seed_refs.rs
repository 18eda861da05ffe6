// generated by tools/oracle/gen_hyp2f1_refs.py; do not edit by hand

pub const B_ONE_REFS: [(f64, f64, f64, f64, f64, f64, f64, f64, f64, f64, f64); 6] = [
    (0.3, 0.0, 0.4, 0.0, 1.8001, 0.0, 0.5, 0.0, 0.07866466394077906, 0.0, 1e-13),
    (0.3, 0.0, 0.4, 0.0, 1.7999, 0.0, 0.5, 0.0, 0.07871681014929406, 0.0, 1e-11),
    (0.25, 0.0, 0.25, 0.0, 1.5, 0.0, 0.5, 0.0, 0.06698913814488587, 0.0, 1e-12),
    (0.3, 0.0, 0.4, 0.0, 1.7, 0.0, 0.5, 0.0, 0.10533925808347323, 0.0, 1e-11),
    (0.25, 0.0, 0.25, 0.0, 1.01, 0.0, 0.5, -0.1, 0.14366998610235768, 0.023390227784448638, 1e-13),
    (1.1, -0.3, 0.8, 0.2, 3.9000000000000004, -0.02999999999999997, 0.3, 0.2, -1.3528554834555007, -1.5015687964407551, 1e-11),
];

pub const B_INF_REFS: [(f64, f64, f64, f64, f64, f64, f64, f64, f64, f64, f64); 5] = [
    (0.3, 0.1, 1.5, 0.1, 1.1, -0.4, -3.0, 1.0, -0.21108812884058115, 0.2441221357867128, 1e-13),
    (0.3, 0.1, 1.3999000000000001, 0.1, 1.1, -0.4, -3.0, 1.0, -0.26484436990989596, 0.27023773257107375, 1e-11),
    (0.25, 0.1, 2.25, 0.1, 1.1, -0.4, -1.5, 0.0, -0.2490114375960466, -0.14091085480255522, 1e-12),
    (0.3, 0.1, 2.3, 0.1, 1.1, -0.4, -1.5, 0.0, -0.3280480117041902, -0.11448123541570136, 1e-11),
    (0.6, -0.2, 1.6, -0.13, 1.3, 0.5, 2.5, 2.5, -1.6632877039171527, -1.559872247084844, 1e-11),
];

pub const A_SUM_REFS: [(u32, f64, f64, f64, f64, f64); 5] = [
    (2, 1e-09, 0.0, 1.0000000004227843, 0.0, 1e-10),
    (5, 0.0, 0.07, -24.046528863718613, -2.54468585391642, 1e-12),
    (1, 0.5, 0.0, -0.5641895835477563, 0.0, 1e-13),
    (4, -0.3, 0.0, 3.580061179962481, 0.0, 1e-13),
    (3, 1e-13, -1e-13, -2.0000000000001847, 1.8455686701965257e-13, 1e-10),
];
