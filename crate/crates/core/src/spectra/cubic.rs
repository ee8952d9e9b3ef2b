use std::f64::consts::PI;

/// Real roots of the depressed cubic `λ³ + bλ + c`, descending.
///
/// Three roots (with repetition) when `4b³ + 27c² ≤ 0`, computed with the
/// trigonometric method; otherwise the single real root from Cardano's
/// formula.
pub fn solve_cubic_depressed(b: f64, c: f64) -> Vec<f64> {
    if b == 0.0 && c == 0.0 {
        return vec![0.0; 3];
    }
    let discriminant = 4.0 * b * b * b + 27.0 * c * c;
    let mut roots = if b < 0.0 && discriminant <= 0.0 {
        let amplitude = 2.0 * (-b / 3.0).sqrt();
        let arg = (3.0 * c / (2.0 * b) * (-3.0 / b).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        (0..3)
            .map(|k| amplitude * (phi - 2.0 * PI * k as f64 / 3.0).cos())
            .collect::<Vec<_>>()
    } else if b == 0.0 {
        vec![(-c).cbrt()]
    } else {
        let half = -c / 2.0;
        let sq = (c * c / 4.0 + b * b * b / 27.0).sqrt();
        // pick the sign that avoids cancellation
        let w = (half + sq.copysign(half)).cbrt();
        vec![w - b / (3.0 * w)]
    };
    for x in roots.iter_mut() {
        *x = polish(*x, b, c);
    }
    roots.sort_by(|x, y| y.total_cmp(x));
    roots
}

fn polish(x: f64, b: f64, c: f64) -> f64 {
    let f = |t: f64| t * t * t + b * t + c;
    let slope = 3.0 * x * x + b;
    if slope == 0.0 {
        return x;
    }
    let next = x - f(x) / slope;
    if f(next).abs() < f(x).abs() {
        next
    } else {
        x
    }
}
