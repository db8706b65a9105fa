use std::fmt;

use crate::ComplexValue;

/// An ordered assignment of complex values to parameter names.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Point(Vec<(String, ComplexValue)>);

impl Point {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builder form of [`Point::set`].
    pub fn with(mut self, name: &str, value: impl Into<ComplexValue>) -> Self {
        self.set(name, value);
        self
    }

    /// Insert or replace a parameter, keeping first-insertion order.
    pub fn set(&mut self, name: &str, value: impl Into<ComplexValue>) {
        let value = value.into();
        match self.0.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = value,
            None => self.0.push((name.to_owned(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<ComplexValue> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, ComplexValue)> {
        self.0.iter().map(|(n, v)| (n.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `a=0.25,b=0.3+0.1i`; real values print without an imaginary part.
impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{name}=")?;
            format_complex(f, *value)?;
        }
        Ok(())
    }
}

fn format_complex(f: &mut fmt::Formatter<'_>, z: ComplexValue) -> fmt::Result {
    if z.im == 0.0 {
        write!(f, "{}", z.re)
    } else if z.re == 0.0 {
        write!(f, "{}i", z.im)
    } else if z.im < 0.0 {
        write!(f, "{}-{}i", z.re, -z.im)
    } else {
        write!(f, "{}+{}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_replaces_in_place() {
        let mut p = Point::new().with("a", 0.25).with("b", ComplexValue::new(0.3, 0.1));
        p.set("a", 0.5);
        assert_eq!(p.get("a"), Some(ComplexValue::new(0.5, 0.0)));
        assert_eq!(p.iter().map(|(n, _)| n).collect::<Vec<_>>(), ["a", "b"]);
        assert_eq!(p.to_string(), "a=0.5,b=0.3+0.1i");
    }

    #[test]
    fn negative_imaginary_display() {
        let p = Point::new().with("z", ComplexValue::new(0.2, -0.2));
        assert_eq!(p.to_string(), "z=0.2-0.2i");
        assert_eq!(Point::new().to_string(), "");
    }
}
