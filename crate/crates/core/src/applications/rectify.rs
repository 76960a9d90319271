/// Length of the inscribed polygon through `n + 1` equally spaced parameter
/// values on `[t_start, t_end]`: the sum of straight chord lengths.
pub fn rectify<C>(curve: C, t_start: f64, t_end: f64, n: usize) -> f64
where
    C: Fn(f64) -> (f64, f64),
{
    assert!(n >= 1, "at least one segment");
    let span = t_end - t_start;
    let at = |i: usize| {
        if i == n {
            curve(t_end)
        } else {
            curve(t_start + span * (i as f64 / n as f64))
        }
    };
    let mut prev = at(0);
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for i in 1..=n {
        let next = at(i);
        let chord = (next.0 - prev.0).hypot(next.1 - prev.1);
        // Kahan
        let y = chord - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        prev = next;
    }
    sum
}

pub fn unit_circle(t: f64) -> (f64, f64) {
    (t.cos(), t.sin())
}
