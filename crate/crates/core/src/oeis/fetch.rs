use std::collections::HashMap;

use super::bfile::ANumber;
use crate::{Error, Result};

/// Downloads b-files over HTTPS, at most once per A-number for the lifetime
/// of the fetcher. Refuses with [`Error::Offline`] unless network access was
/// enabled when it was built.
#[derive(Debug, Default)]
pub struct BFileFetcher {
    allow_network: bool,
    cache: HashMap<ANumber, String>,
}

impl BFileFetcher {
    pub fn new(allow_network: bool) -> Self {
        BFileFetcher { allow_network, cache: HashMap::new() }
    }

    pub fn fetch(&mut self, a_number: &ANumber) -> Result<String> {
        if let Some(text) = self.cache.get(a_number) {
            return Ok(text.clone());
        }
        let text = fetch_bfile(a_number.as_str(), self.allow_network)?;
        self.cache.insert(a_number.clone(), text.clone());
        Ok(text)
    }
}

/// Raw b-file text for `a_number`. The A-number is validated before the
/// network gate is consulted.
pub fn fetch_bfile(a_number: &str, allow_network: bool) -> Result<String> {
    let a: ANumber = a_number.parse()?;
    if !allow_network {
        return Err(Error::Offline);
    }
    let url = a.bfile_url();
    let mut response = ureq::get(&url).call().map_err(|e| match e {
        ureq::Error::StatusCode(status) => Error::Http { status, url: url.clone() },
        other => Error::Network(other.to_string()),
    })?;
    response.body_mut().read_to_string().map_err(|e| Error::Network(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_a_number_is_rejected_first() {
        assert!(matches!(fetch_bfile("A00", false), Err(Error::InvalidANumber(_))));
        assert!(matches!(fetch_bfile("A00", true), Err(Error::InvalidANumber(_))));
    }

    #[test]
    fn offline_by_default() {
        assert!(matches!(fetch_bfile("A004146", false), Err(Error::Offline)));
        let mut f = BFileFetcher::default();
        assert!(matches!(f.fetch(&"A004146".parse().unwrap()), Err(Error::Offline)));
    }
}
