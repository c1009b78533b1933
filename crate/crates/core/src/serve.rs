//! Minimal local completion endpoint, one request per connection.
//!
//! Request (UTF-8): a header line `COMPLETE [alpha=<f>] [beta=<f>] [baseline]`
//! followed by the raw context text; the client half-closes the stream to end
//! the request. Response: `OK`, one `key value` line per result field, then a
//! `COMPLETION <byte-count>` line followed by exactly that many bytes of
//! completion text. Malformed requests get a single `ERR <category>: <detail>`
//! line and the connection is closed. The process never dies on a bad request.

use std::io::{Read, Write};
use std::net::{TcpListener, TcpStream};
use std::sync::Arc;

use crate::config::RunConfig;
use crate::corpus::{Vocabulary, SOS};
use crate::dyninfer::{generate, generate_baseline, GenerationConfig};
use crate::error::{Error, Result};
use crate::pipeline::Engine;

pub struct ServeState {
    pub engine: Engine,
    pub base_config: GenerationConfig,
}

impl ServeState {
    pub fn new(engine: Engine, config: &RunConfig) -> Self {
        ServeState {
            engine,
            base_config: config.generation_config(),
        }
    }
}

/// Accept connections forever, one handler thread per connection.
pub fn serve(state: Arc<ServeState>, listener: TcpListener) -> Result<()> {
    for stream in listener.incoming() {
        match stream {
            Ok(stream) => {
                let state = Arc::clone(&state);
                std::thread::spawn(move || {
                    let _ = handle_connection(&state, stream);
                });
            }
            Err(_) => continue,
        }
    }
    Ok(())
}

fn parse_header(line: &str, base: &GenerationConfig) -> Result<(GenerationConfig, bool)> {
    let mut parts = line.split_whitespace();
    match parts.next() {
        Some("COMPLETE") => {}
        other => {
            return Err(Error::Config(format!(
                "expected COMPLETE header, got '{}'",
                other.unwrap_or("")
            )))
        }
    }
    let mut config = base.clone();
    let mut baseline = false;
    for part in parts {
        if part == "baseline" {
            baseline = true;
        } else if let Some(v) = part.strip_prefix("alpha=") {
            config.thresholds.alpha = v
                .parse()
                .map_err(|_| Error::Config(format!("bad alpha '{v}'")))?;
        } else if let Some(v) = part.strip_prefix("beta=") {
            config.thresholds.beta = v
                .parse()
                .map_err(|_| Error::Config(format!("bad beta '{v}'")))?;
        } else {
            return Err(Error::Config(format!("unknown header field '{part}'")));
        }
    }
    config.thresholds.validate()?;
    Ok((config, baseline))
}

pub fn handle_connection(state: &ServeState, mut stream: TcpStream) -> Result<()> {
    let mut payload = Vec::new();
    if let Err(e) = stream.read_to_end(&mut payload) {
        let _ = writeln!(stream, "ERR io: {e}");
        return Ok(());
    }
    let response = match respond(state, &payload) {
        Ok(bytes) => bytes,
        Err(e) => format!("ERR {}: {e}\n", e.category()).into_bytes(),
    };
    let _ = stream.write_all(&response);
    let _ = stream.flush();
    Ok(())
}

fn respond(state: &ServeState, payload: &[u8]) -> Result<Vec<u8>> {
    let text = std::str::from_utf8(payload)
        .map_err(|_| Error::Config("request is not valid UTF-8".into()))?;
    let Some((header, context_text)) = text.split_once('\n') else {
        return Err(Error::Config("missing header line".into()));
    };
    let (config, baseline) = parse_header(header.trim_end_matches('\r'), &state.base_config)?;
    if context_text.is_empty() {
        return Err(Error::EmptyContext);
    }
    let mut context = vec![SOS];
    context.extend(Vocabulary::encode(context_text.as_bytes()));

    let result = if baseline {
        generate_baseline(&state.engine.backbone, &context, &config)?
    } else {
        generate(
            &state.engine.backbone,
            &state.engine.heads,
            &state.engine.classifier,
            &context,
            &config,
        )?
    };

    let completion = result.text();
    let mut out = String::new();
    out.push_str("OK\n");
    out.push_str(&format!("stopped {}\n", result.stopped));
    out.push_str(&format!(
        "exit_layers {}\n",
        result
            .per_token_exit_layer
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    ));
    out.push_str(&format!("full_layers {}\n", result.cost.full_layer_count));
    out.push_str(&format!("attn_only {}\n", result.cost.attn_only_count));
    out.push_str(&format!(
        "layer_equivalents {:.4}\n",
        result.cost.layer_equivalents()
    ));
    out.push_str(&format!(
        "wall_us {}\n",
        result.cost.wall_clock.as_micros()
    ));
    out.push_str(&format!("COMPLETION {}\n", completion.len()));
    let mut bytes = out.into_bytes();
    bytes.extend_from_slice(completion.as_bytes());
    Ok(bytes)
}
